#ifndef MVRP_NEIGHBORHOODS_HPP
#define MVRP_NEIGHBORHOODS_HPP

#include <string>
#include <vector>

#include "mvrp/model.hpp"

namespace mvrp {

enum class MoveKind {
  reverse,
  swap_intra,
  two_opt_intra,
  remove_insert,
  swap_inter,
  seq_exchange,
};

std::string to_string(MoveKind kind);

/// One concrete move. Which fields are meaningful depends on `kind`:
///   reverse:        r1
///   swap_intra:     r1, pos1, pos2
///   two_opt_intra:  r1, pos1 < pos2 (segment [pos1..pos2] reversed)
///   remove_insert:  r1, pos1 -> r2, pos2 (pos2 is an insertion slot)
///   swap_inter:     r1, pos1 <-> r2, pos2
///   seq_exchange:   r1, (pos1, len1) <-> r2, (pos2, len2)
struct Move {
  MoveKind kind;
  int r1 = 0;
  int pos1 = 0;
  int r2 = 0;
  int pos2 = 0;
  int len1 = 1;
  int len2 = 1;
};

// Move primitives. Index errors throw std::out_of_range; a same-route
// inter move throws std::invalid_argument.
Route reverse(const Route& route);
Route swap_intra(const Route& route, int i, int j);
Route two_opt_intra(const Route& route, int i, int j);  // requires i < j
std::vector<Route> remove_insert(const std::vector<Route>& routes, int r1, int pos1,
                                 int r2, int pos2);
std::vector<Route> swap_inter(const std::vector<Route>& routes, int r1, int pos1,
                              int r2, int pos2);
std::vector<Route> seq_exchange_inter(const std::vector<Route>& routes,
                                      int r1, int start1, int len1,
                                      int r2, int start2, int len2,
                                      int max_seg_len = 3);

std::vector<Route> apply_move(const std::vector<Route>& routes, const Move& move,
                              int max_seg_len = 3);

/// All moves of one kind on the given routes, in lexicographic parameter
/// order. Supported kinds: two_opt_intra, remove_insert, swap_inter,
/// seq_exchange (segment lengths capped at max_seg_len).
std::vector<Move> enumerate_moves(const std::vector<Route>& routes, MoveKind kind,
                                  int max_seg_len = 3);

}  // namespace mvrp

#endif  // MVRP_NEIGHBORHOODS_HPP
