#pragma once

#include "tdlc/shift.hpp"

namespace tdlc::shift {

// pointwise op[a_i][b_i]
Profile combine(const Profile& a, const Profile& b, const std::vector<std::vector<int>>& op);
// coordinate i <- g[a_{i+s}]
Profile transform(const Profile& a, long s, const std::vector<int>& g);
// greatest W with W_i = u_i meet g(W_{i+s}), the limit of iterating from u
Profile solve_recursion(const Profile& u, long s, const std::vector<int>& g, const std::vector<std::vector<int>>& meet);

}  // namespace tdlc::shift
