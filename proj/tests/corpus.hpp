#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "ocsym/problem.hpp"

inline ocsym::OCProblem load_problem(const std::string& name) {
  std::ifstream in(std::string(OCSYM_PROBLEM_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ocsym::parse_problem(ss.str());
}
