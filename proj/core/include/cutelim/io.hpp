#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cutelim/proof.hpp"
#include "cutelim/trace.hpp"

namespace cutelim {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t col);
  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }

 private:
  std::size_t line_, col_;
};

struct ProofDocument {
  std::optional<std::string> name;
  std::optional<Sequent> expect;
  Proof proof;
};

Formula parse_formula(std::string_view text);
Sequent parse_sequent(std::string_view text);
// Validation failures surface as ParseError at the offending rule.
Proof parse_proof(std::string_view text);
// Also checks the (expect ...) sequent when present.
ProofDocument parse_document(std::string_view text);

std::string print_proof(const Proof& p);
std::string print_document(const ProofDocument& d);

std::string emit_trace(const std::vector<TraceRecord>& records, bool json = false);

}  // namespace cutelim
