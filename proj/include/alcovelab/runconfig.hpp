// CLI run configuration; parsed configs round-trip through JSON unchanged.
#pragma once

#include "rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace alcovelab {

struct RunConfig {
  std::string subcommand;
  std::string group = "gl";
  int n = 2;
  std::vector<Int> mu;
  std::vector<int> K;
  // oracle parameters
  long q = 2;
  int m_max = 1;
  Int depth = 0;
  std::string b_spec = "identity";
  // adlv
  std::string lambda;   // "p/q,p/q"
  std::string reading = "orbit";
  // kottwitz
  std::string nu, nu2;  // rational slope vectors
  // localmodel
  int r = 1;
  std::vector<int> chain;
  // output & limits
  std::string format = "json";
  Int cap = 1000000;
  Int seed = 0;

  bool operator==(const RunConfig& o) const {
    return subcommand == o.subcommand && group == o.group && n == o.n && mu == o.mu &&
           K == o.K && q == o.q && m_max == o.m_max && depth == o.depth &&
           b_spec == o.b_spec && lambda == o.lambda && reading == o.reading &&
           nu == o.nu && nu2 == o.nu2 && r == o.r && chain == o.chain &&
           format == o.format && cap == o.cap && seed == o.seed;
  }
};

inline nlohmann::ordered_json runconfig_to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["subcommand"] = c.subcommand;
  j["group"] = c.group;
  j["n"] = c.n;
  j["mu"] = c.mu;
  j["K"] = c.K;
  j["q"] = c.q;
  j["m_max"] = c.m_max;
  j["depth"] = c.depth;
  j["b_spec"] = c.b_spec;
  j["lambda"] = c.lambda;
  j["reading"] = c.reading;
  j["nu"] = c.nu;
  j["nu2"] = c.nu2;
  j["r"] = c.r;
  j["chain"] = c.chain;
  j["format"] = c.format;
  j["cap"] = c.cap;
  j["seed"] = c.seed;
  return j;
}

inline RunConfig runconfig_from_json(const nlohmann::ordered_json& j) {
  RunConfig c;
  c.subcommand = j.at("subcommand").get<std::string>();
  c.group = j.at("group").get<std::string>();
  c.n = j.at("n").get<int>();
  c.mu = j.at("mu").get<std::vector<Int>>();
  c.K = j.at("K").get<std::vector<int>>();
  c.q = j.at("q").get<long>();
  c.m_max = j.at("m_max").get<int>();
  c.depth = j.at("depth").get<Int>();
  c.b_spec = j.at("b_spec").get<std::string>();
  c.lambda = j.at("lambda").get<std::string>();
  c.reading = j.at("reading").get<std::string>();
  c.nu = j.at("nu").get<std::string>();
  c.nu2 = j.at("nu2").get<std::string>();
  c.r = j.at("r").get<int>();
  c.chain = j.at("chain").get<std::vector<int>>();
  c.format = j.at("format").get<std::string>();
  c.cap = j.at("cap").get<Int>();
  c.seed = j.at("seed").get<Int>();
  return c;
}

}  // namespace alcovelab
