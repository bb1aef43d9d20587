#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pms/graph.hpp"

namespace pms::named {

Graph path(int n);                       // P_n: 1-2-...-n
Graph cycle(int n);                      // C_n: 1-2-...-n-1
Graph complete(int n);                   // K_n
Graph star(int leaves);                  // K_{1,leaves}, centre 1
Graph complete_bipartite(int p, int q);  // parts {1..p}, {p+1..p+q}
// Parts laid out consecutively in the given order.
Graph complete_multipartite(const std::vector<int>& parts);
// K_{1,1,q}: vertices 1 and 2 universal, 3..q+2 independent.
Graph k11q(int q);
// Two triangles sharing vertex 1.
Graph bowtie();
// C4 on 1..4 with a pendant path 4-5-...-n.
Graph c4_with_tail(int n);
// Blocks K4, K_{2,3} and K_{3,3} glued at two cut vertices (13 vertices).
Graph glued_blocks_example();
// Even-cycle pseudotree on 22 vertices: cycle degree 4, internal tree
// vertices of degree 3, leaves elsewhere.
Graph even_cycle_pseudotree_example();

// Parses names like "C5", "P4", "K4", "K2,3", "K1,1,3", "star3", "bowtie",
// "glued-blocks", "even-cycle-pseudotree", "c4-tail6".
std::optional<Graph> by_name(const std::string& name);

}  // namespace pms::named
