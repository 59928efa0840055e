#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "cutelim/io.hpp"

namespace cutelim::testing {

inline Formula F(const std::string& s) { return parse_formula(s); }
inline Sequent S(const std::string& s) { return parse_sequent(s); }
inline Proof P(const std::string& s) { return parse_proof(s); }

inline std::string dataFile(const std::string& name) {
  std::ifstream in(std::string(CUTELIM_TEST_DATA) + "/" + name);
  if (!in) throw std::runtime_error("missing test data " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Proof dataProof(const std::string& name) { return parse_document(dataFile(name)).proof; }

}  // namespace cutelim::testing
