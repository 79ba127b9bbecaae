#pragma once

#include <string>
#include <string_view>

#include "acg/board.hpp"

namespace acg {

class BoardFormatError : public Error {
public:
  using Error::Error;
};

/// Raised by load_board when an atom or bundle breaks consistency.
class ConsistencyError : public Error {
public:
  ConsistencyError(std::string subject, std::string state, std::string set);

  const std::string& subject() const { return subject_; }
  const std::string& state() const { return state_; }
  const std::string& set() const { return set_; }

private:
  std::string subject_, state_, set_;
};

// Board files are JSON:
//   {"states": [...],
//    "atoms": {"a": {"rho1": [["s0", ["s1"]], ...], "rho2": [...]}, ...},
//    "bundles": {"a||b^d": {"rho1": [...], "rho2": [...]}}}
// Each pair is one generator of the relation; relations are the monotone
// closure of their generators. States are kept in lexicographic order.

/// Decodes and closes the relations without checking consistency.
GameBoard read_board(std::string_view bytes);

/// read_board, then rejects boards that violate consistency and records the
/// FIN and DET flags.
GameBoard load_board(std::string_view bytes);

/// Emits minimal generators only, states sorted, compact JSON.
std::string save_board(const GameBoard& board);

} // namespace acg
