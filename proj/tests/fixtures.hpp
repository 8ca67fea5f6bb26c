#pragma once

#include "tpack/graft.hpp"

namespace tpack::fixtures {

// 0=a, 1=b, 2=c all terminal; edges 0:(a,b), 1:(b,c), 2:(a,c)
inline Graft triangle() { return Graft::build(3, {0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}}); }

// terminals a=0, b=1, c=2; hub v=3; edges 0,1:(a,v), 2,3:(b,v), 4,5:(c,v)
inline Graft doubled_star() {
  return Graft::build(4, {0, 1, 2}, {{0, 3}, {0, 3}, {1, 3}, {1, 3}, {2, 3}, {2, 3}});
}

// terminals a=0, b=1, c=2; hub v=3; one edge each (v has odd degree)
inline Graft odd_star() { return Graft::build(4, {0, 1, 2}, {{0, 3}, {1, 3}, {2, 3}}); }

// terminals a=0, b=1; inner v=2; edges 0:(a,v), 1:(v,b)
inline Graft two_edge_path() { return Graft::build(3, {0, 1}, {{0, 2}, {2, 1}}); }

// terminals s=0, t=1; inner u=2; edges 0,1:(s,u), 2,3:(u,t)
inline Graft doubled_two_path() {
  return Graft::build(3, {0, 1}, {{0, 2}, {0, 2}, {2, 1}, {2, 1}});
}

// terminals a=0, b=1; triangle on x=2, y=3, z=4; edges 0:(a,b),
// 1:(x,y), 2:(y,z), 3:(z,x)
inline Graft bridge_and_triangle() {
  return Graft::build(5, {0, 1}, {{0, 1}, {2, 3}, {3, 4}, {4, 2}});
}

// terminals a=0, b=1; inner u=2; edges 0,1:(a,u), 2:(u,b)
inline Graft lopsided_star() { return Graft::build(3, {0, 1}, {{0, 2}, {0, 2}, {2, 1}}); }

// terminals a=0, b=1; inner u=2; edges 0-3:(a,u), 4,5:(u,b)
inline Graft four_two_star() {
  return Graft::build(3, {0, 1}, {{0, 2}, {0, 2}, {0, 2}, {0, 2}, {2, 1}, {2, 1}});
}

// terminals s=0, t=1; inner x=2; edges 0:(s,t), 1:(t,x), 2:(x,t)
inline Graft edge_and_two_cycle() { return Graft::build(3, {0, 1}, {{0, 1}, {1, 2}, {2, 1}}); }

// terminals a=0, b=1, c=2; hub v=3; a hangs off a doubled chain a-p1-p2-v;
// b and c attach to v by doubled edges. Every terminal boundary is the
// unique minimum cut, so extraction recurses through several split-offs.
inline Graft doubled_chain_star() {
  return Graft::build(6, {0, 1, 2},
                      {{0, 4}, {0, 4}, {4, 5}, {4, 5}, {5, 3}, {5, 3}, {1, 3}, {1, 3}, {2, 3},
                       {2, 3}});
}

// terminals s=0, t=1; inner x=2, y=3; the linkage path s-x-t collides with
// the cycle t-y-x-t that covers the low-id terminal edge 0
inline Graft colliding_peel() {
  return Graft::build(4, {0, 1}, {{1, 3}, {3, 2}, {2, 1}, {0, 2}, {2, 1}});
}

}  // namespace tpack::fixtures
