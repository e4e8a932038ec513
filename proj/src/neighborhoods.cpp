#include "mvrp/neighborhoods.hpp"

#include <algorithm>
#include <stdexcept>

namespace mvrp {

namespace {

void check_route_index(const std::vector<Route>& routes, int r) {
  if (r < 0 || r >= static_cast<int>(routes.size())) {
    throw std::out_of_range("route index " + std::to_string(r) + " out of range");
  }
}

void check_position(const Route& route, int pos) {
  if (pos < 0 || pos >= static_cast<int>(route.size())) {
    throw std::out_of_range("position " + std::to_string(pos) + " out of range");
  }
}

void check_segment(const Route& route, int start, int len, int max_seg_len) {
  if (len < 1) throw std::out_of_range("segment length must be >= 1");
  if (len > max_seg_len) {
    throw std::invalid_argument("segment length " + std::to_string(len) +
                                " exceeds max " + std::to_string(max_seg_len));
  }
  if (start < 0 || start + len > static_cast<int>(route.size())) {
    throw std::out_of_range("segment [" + std::to_string(start) + ", +" +
                            std::to_string(len) + ") out of range");
  }
}

}  // namespace

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::reverse: return "reverse";
    case MoveKind::swap_intra: return "swap-intra";
    case MoveKind::two_opt_intra: return "2-opt-intra";
    case MoveKind::remove_insert: return "remove-insert";
    case MoveKind::swap_inter: return "swap-inter";
    case MoveKind::seq_exchange: return "seq-exchange";
  }
  return "?";
}

Route reverse(const Route& route) {
  Route out = route;
  std::reverse(out.pois.begin(), out.pois.end());
  return out;
}

Route swap_intra(const Route& route, int i, int j) {
  check_position(route, i);
  check_position(route, j);
  Route out = route;
  std::swap(out.pois[i], out.pois[j]);
  return out;
}

Route two_opt_intra(const Route& route, int i, int j) {
  check_position(route, i);
  check_position(route, j);
  if (i >= j) throw std::out_of_range("two_opt_intra requires i < j");
  Route out = route;
  std::reverse(out.pois.begin() + i, out.pois.begin() + j + 1);
  return out;
}

std::vector<Route> remove_insert(const std::vector<Route>& routes, int r1, int pos1,
                                 int r2, int pos2) {
  check_route_index(routes, r1);
  check_route_index(routes, r2);
  if (r1 == r2) throw std::invalid_argument("remove_insert requires two distinct routes");
  check_position(routes[r1], pos1);
  if (pos2 < 0 || pos2 > static_cast<int>(routes[r2].size())) {
    throw std::out_of_range("insertion slot " + std::to_string(pos2) + " out of range");
  }
  std::vector<Route> out = routes;
  const int poi = out[r1].pois[pos1];
  out[r1].pois.erase(out[r1].pois.begin() + pos1);
  out[r2].pois.insert(out[r2].pois.begin() + pos2, poi);
  return out;
}

std::vector<Route> swap_inter(const std::vector<Route>& routes, int r1, int pos1,
                              int r2, int pos2) {
  check_route_index(routes, r1);
  check_route_index(routes, r2);
  if (r1 == r2) throw std::invalid_argument("swap_inter requires two distinct routes");
  check_position(routes[r1], pos1);
  check_position(routes[r2], pos2);
  std::vector<Route> out = routes;
  std::swap(out[r1].pois[pos1], out[r2].pois[pos2]);
  return out;
}

std::vector<Route> seq_exchange_inter(const std::vector<Route>& routes,
                                      int r1, int start1, int len1,
                                      int r2, int start2, int len2,
                                      int max_seg_len) {
  check_route_index(routes, r1);
  check_route_index(routes, r2);
  if (r1 == r2) throw std::invalid_argument("seq_exchange_inter requires two distinct routes");
  check_segment(routes[r1], start1, len1, max_seg_len);
  check_segment(routes[r2], start2, len2, max_seg_len);

  std::vector<Route> out = routes;
  std::vector<int> seg1(routes[r1].pois.begin() + start1,
                        routes[r1].pois.begin() + start1 + len1);
  std::vector<int> seg2(routes[r2].pois.begin() + start2,
                        routes[r2].pois.begin() + start2 + len2);
  out[r1].pois.erase(out[r1].pois.begin() + start1, out[r1].pois.begin() + start1 + len1);
  out[r1].pois.insert(out[r1].pois.begin() + start1, seg2.begin(), seg2.end());
  out[r2].pois.erase(out[r2].pois.begin() + start2, out[r2].pois.begin() + start2 + len2);
  out[r2].pois.insert(out[r2].pois.begin() + start2, seg1.begin(), seg1.end());
  return out;
}

std::vector<Route> apply_move(const std::vector<Route>& routes, const Move& move,
                              int max_seg_len) {
  switch (move.kind) {
    case MoveKind::reverse: {
      check_route_index(routes, move.r1);
      std::vector<Route> out = routes;
      out[move.r1] = reverse(out[move.r1]);
      return out;
    }
    case MoveKind::swap_intra: {
      check_route_index(routes, move.r1);
      std::vector<Route> out = routes;
      out[move.r1] = swap_intra(out[move.r1], move.pos1, move.pos2);
      return out;
    }
    case MoveKind::two_opt_intra: {
      check_route_index(routes, move.r1);
      std::vector<Route> out = routes;
      out[move.r1] = two_opt_intra(out[move.r1], move.pos1, move.pos2);
      return out;
    }
    case MoveKind::remove_insert:
      return remove_insert(routes, move.r1, move.pos1, move.r2, move.pos2);
    case MoveKind::swap_inter:
      return swap_inter(routes, move.r1, move.pos1, move.r2, move.pos2);
    case MoveKind::seq_exchange:
      return seq_exchange_inter(routes, move.r1, move.pos1, move.len1,
                                move.r2, move.pos2, move.len2, max_seg_len);
  }
  throw std::invalid_argument("unknown move kind");
}

std::vector<Move> enumerate_moves(const std::vector<Route>& routes, MoveKind kind,
                                  int max_seg_len) {
  std::vector<Move> moves;
  const int m = static_cast<int>(routes.size());
  switch (kind) {
    case MoveKind::two_opt_intra:
      for (int r = 0; r < m; ++r) {
        const int len = static_cast<int>(routes[r].size());
        for (int i = 0; i < len; ++i) {
          for (int j = i + 1; j < len; ++j) {
            moves.push_back({kind, r, i, 0, j});
          }
        }
      }
      break;
    case MoveKind::remove_insert:
      for (int r1 = 0; r1 < m; ++r1) {
        const int len1 = static_cast<int>(routes[r1].size());
        if (len1 == 0) continue;
        for (int r2 = 0; r2 < m; ++r2) {
          if (r2 == r1) continue;
          const int len2 = static_cast<int>(routes[r2].size());
          for (int p1 = 0; p1 < len1; ++p1) {
            for (int p2 = 0; p2 <= len2; ++p2) {
              moves.push_back({kind, r1, p1, r2, p2});
            }
          }
        }
      }
      break;
    case MoveKind::swap_inter:
      for (int r1 = 0; r1 < m; ++r1) {
        for (int r2 = r1 + 1; r2 < m; ++r2) {
          const int len1 = static_cast<int>(routes[r1].size());
          const int len2 = static_cast<int>(routes[r2].size());
          for (int p1 = 0; p1 < len1; ++p1) {
            for (int p2 = 0; p2 < len2; ++p2) {
              moves.push_back({kind, r1, p1, r2, p2});
            }
          }
        }
      }
      break;
    case MoveKind::seq_exchange:
      for (int r1 = 0; r1 < m; ++r1) {
        for (int r2 = r1 + 1; r2 < m; ++r2) {
          const int len1 = static_cast<int>(routes[r1].size());
          const int len2 = static_cast<int>(routes[r2].size());
          for (int s1 = 0; s1 < len1; ++s1) {
            for (int l1 = 1; l1 <= std::min(max_seg_len, len1 - s1); ++l1) {
              for (int s2 = 0; s2 < len2; ++s2) {
                for (int l2 = 1; l2 <= std::min(max_seg_len, len2 - s2); ++l2) {
                  moves.push_back({kind, r1, s1, r2, s2, l1, l2});
                }
              }
            }
          }
        }
      }
      break;
    default:
      throw std::invalid_argument("enumerate_moves does not support " + to_string(kind));
  }
  return moves;
}

}  // namespace mvrp
