#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eulerperm/permutation.hpp"

namespace eulerperm {

// Binary tree labeled by {1..n} with labels increasing away from the root.
// Value type; nodes live in a flat vector, child slot -1 meaning absent.
class IncreasingBinaryTree {
public:
    struct Node {
        Letter label = 0;
        int left = -1;
        int right = -1;
    };

    IncreasingBinaryTree() = default;                 // the empty tree

    // Serialization: node -> "(L left right)", absent child -> ".",
    // single node -> "(1 . .)", empty tree -> ".".
    static IncreasingBinaryTree parse(std::string_view text);
    std::string serialize() const;

    std::size_t size() const { return nodes_.size(); }
    bool empty() const { return root_ < 0; }
    int root() const { return root_; }
    const Node& node(int idx) const;

    bool operator==(const IncreasingBinaryTree& o) const; // structural

    // Construction surface used by psi/omega; validate() enforces the label
    // invariants (set {1..n}, increasing along every edge, root reachable).
    int add_node(Letter label);
    void link(int parent, int left_child, int right_child);
    void set_root(int idx) { root_ = idx; }
    void validate() const;                            // throws MalformedTree

private:
    std::vector<Node> nodes_;
    int root_ = -1;
};

// Unlabeled underlying structure; serialized with "*" in place of labels.
class TreeShape {
public:
    struct Node {
        int left = -1;
        int right = -1;
    };

    TreeShape() = default;
    static TreeShape parse(std::string_view text);
    std::string serialize() const;

    std::size_t size() const { return nodes_.size(); }
    bool empty() const { return root_ < 0; }
    int root() const { return root_; }
    const Node& node(int idx) const;

    bool operator==(const TreeShape& o) const;        // structural

    int add_node();
    void link(int parent, int left_child, int right_child);
    void set_root(int idx) { root_ = idx; }

private:
    std::vector<Node> nodes_;
    int root_ = -1;
};

// Min-factorization bijection: the least letter becomes the root, the prefix
// maps to the left subtree and the suffix to the right.  Requires standard.
IncreasingBinaryTree psi(const Permutation& p);
Permutation psi_inv(const IncreasingBinaryTree& t);   // in-order word

TreeShape shape(const IncreasingBinaryTree& t);

// Common descent set of every increasing labeling of the shape (the descent
// set depends on the shape alone); computed from the smallest-label-first
// heap labeling.  1-based positions.
std::vector<int> des_from_shape(const TreeShape& s);

// Every internal vertex's subtree has its maximum label on the right (I),
// or the minimum label among proper descendants on the right (II).
bool is_andre1_tree(const IncreasingBinaryTree& t);
bool is_andre2_tree(const IncreasingBinaryTree& t);
// n is the right-most vertex, and at every stage of deleting n, n-1, ...:
// no internal vertex inside a left subtree has only a left child.
bool is_simsun_tree(const IncreasingBinaryTree& t);

// Shapes with no internal vertex having only a left child, sorted by their
// serialization string.  Throws ResourceLimit past the cap.
std::vector<TreeShape> enumerate_url(int n, int cap = kDefaultEnumCap);

// M_0..M_upto with M_0 = M_1 = 1, M_n = M_{n-1} + sum M_k M_{n-2-k}.
std::vector<long long> motzkin_numbers(int upto);

// Pairs (i, j) with i > j such that j lies strictly to the right of the
// root-to-i path, or j is on the path with its left child also on the path.
// Sorted by (i, j).
std::vector<std::pair<Letter, Letter>> tree_inversions(const IncreasingBinaryTree& t);
// Labels i-1 such that (i, i-1) is a tree inversion; increasing.
std::vector<Letter> tree_idescents(const IncreasingBinaryTree& t);
// Right-spine labels (the vertices lying in no left subtree); increasing.
std::vector<Letter> r_set(const IncreasingBinaryTree& t);

} // namespace eulerperm
