#pragma once

#include <string>
#include <vector>

#include "girthbound/graph.hpp"

namespace girthbound {

inline constexpr int kDefaultVertexCap = 1 << 20;

Graph cycle(int n);
Graph path(int n);
Graph complete(int n);
Graph hypercube(int d, int vertex_cap = kDefaultVertexCap);

// PC(2k): hypercube of dimension 2k plus all antipodal edges. Vertex ids are
// the 2k-bit vectors; regular of degree 2k+1, odd-girth 2k+1.
Graph projective_cube(int k, int vertex_cap = kDefaultVertexCap);

// Distance in PC(2k): min(w, 2k+1-w) for w the Hamming weight of x^y.
int pc_distance(unsigned x, unsigned y, int k);

// Vertices are the k-subsets of {0..n-1} in colex order (ascending bitmask);
// adjacent iff disjoint.
Graph kneser(int n, int k, int vertex_cap = kDefaultVertexCap);

// Circular clique C_{p,q}: i ~ j iff q <= (i-j mod p) <= p-q.
Graph circular_clique(int p, int q);

Graph toroidal_grid(int a, int b);  // C_a box C_b, vertex (i,j) = i*b+j

// AT(2k,2k): the 2k x 2k toroidal grid plus antipodal edges, row-major ids.
Graph augmented_toroidal(int k);

int at_distance(std::pair<int, int> u, std::pair<int, int> v, int k);
std::pair<int, int> at_antipode(std::pair<int, int> u, int k);

// Generalized level-k Mycielski graph of C_{2k+1}, order 2k^2+k+1.
// Level i (0-based) occupies ids i*(2k+1)..i*(2k+1)+2k, apex is last.
Graph mycielski_level(int k);

struct GadgetGraph {
    Graph graph;
    int u, v, w;
};

// T_{2k+1}(p,q,r): hubs u,v,w pairwise joined by two internally disjoint
// paths of lengths (p, 2k+1-p), (q, 2k+1-q), (r, 2k+1-r). 6k vertices.
GadgetGraph gadget(int k, int p, int q, int r);

Graph c8pp();        // 8-cycle v1..v8 plus chords v1v5, v3v7 (ids 0..7)
Graph x15();         // 10-cycle v0..v9 (ids 0..9) plus x_j = 10+j ~ v_j, v_{j+5}
Graph x16();         // 16-vertex odd-girth-7 bound, adjacency fixed in source
Graph petersen();
Graph grotzsch();
Graph clebsch();     // = projective_cube(2)
Graph wagner();      // V8: 8-cycle plus the four antipodal chords
Graph coxeter();     // three step-1/2/3 heptagon rings plus seven hubs
Graph icosahedron();

// Cyclic neighbour orders of the icosahedron's planar embedding,
// aligned with the vertex numbering of icosahedron().
std::vector<std::vector<int>> icosahedron_rotation();

// Subset labelling of PC(2k): vertices are complementary pairs {S, S-bar} of
// subsets of a (2k+1)-set; the id is the representative avoiding the last
// element, read as a 2k-bit mask.
int pc_vertex_of_subset(unsigned subset, int k);

// K(2k+1,k) as an induced subgraph of PC(2k): the k-subsets in colex order
// mapped through the subset labelling.
std::vector<int> kneser_pc_embedding(int k);

// Translation-equivariant embeddings realizing the canonical edge-colour
// patterns: antipodal cycle edges share a generator, chords map to J.
std::vector<int> c8pp_pc_embedding();  // into projective_cube(2)
std::vector<int> x15_pc_embedding();   // into projective_cube(3)

// Generator dispatch for the CLI: name plus integer parameters.
Graph make_family(const std::string& name, const std::vector<int>& params);
std::vector<std::string> family_names();

}  // namespace girthbound
