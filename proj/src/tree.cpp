#include "eulerperm/tree.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace eulerperm {

namespace {

void skip_spaces(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
}

// Shared recursive-descent parser; label reader differs per tree kind.
template <typename AddNode>
int parse_node(std::string_view text, std::size_t& pos, bool labeled, AddNode&& add,
               std::function<void(int, int, int)> link) {
    skip_spaces(text, pos);
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        return -1;
    }
    if (pos >= text.size() || text[pos] != '(')
        throw MalformedTreeError("expected '(' or '.' in tree text");
    ++pos;
    skip_spaces(text, pos);
    Letter label = 0;
    if (labeled) {
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
            throw MalformedTreeError("expected numeric label");
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
            label = label * 10 + static_cast<Letter>(text[pos++] - '0');
    } else {
        if (pos >= text.size() || text[pos] != '*')
            throw MalformedTreeError("expected '*' label in shape text");
        ++pos;
    }
    int idx = add(label);
    int left = parse_node(text, pos, labeled, add, link);
    int right = parse_node(text, pos, labeled, add, link);
    skip_spaces(text, pos);
    if (pos >= text.size() || text[pos] != ')')
        throw MalformedTreeError("expected ')' in tree text");
    ++pos;
    link(idx, left, right);
    return idx;
}

} // namespace

// ---- IncreasingBinaryTree ----

const IncreasingBinaryTree::Node& IncreasingBinaryTree::node(int idx) const {
    if (idx < 0 || idx >= static_cast<int>(nodes_.size()))
        throw IndexOutOfRangeError("tree node index out of range");
    return nodes_[static_cast<std::size_t>(idx)];
}

int IncreasingBinaryTree::add_node(Letter label) {
    nodes_.push_back(Node{label, -1, -1});
    return static_cast<int>(nodes_.size()) - 1;
}

void IncreasingBinaryTree::link(int parent, int left_child, int right_child) {
    nodes_[static_cast<std::size_t>(parent)].left = left_child;
    nodes_[static_cast<std::size_t>(parent)].right = right_child;
}

IncreasingBinaryTree IncreasingBinaryTree::parse(std::string_view text) {
    IncreasingBinaryTree t;
    std::size_t pos = 0;
    t.root_ = parse_node(
        text, pos, true, [&t](Letter lab) { return t.add_node(lab); },
        [&t](int p, int l, int r) { t.link(p, l, r); });
    skip_spaces(text, pos);
    if (pos != text.size()) throw MalformedTreeError("trailing characters after tree text");
    t.validate();
    return t;
}

std::string IncreasingBinaryTree::serialize() const {
    std::function<std::string(int)> rec = [&](int idx) -> std::string {
        if (idx < 0) return ".";
        const Node& nd = nodes_[static_cast<std::size_t>(idx)];
        return "(" + std::to_string(nd.label) + " " + rec(nd.left) + " " + rec(nd.right) + ")";
    };
    return rec(root_);
}

bool IncreasingBinaryTree::operator==(const IncreasingBinaryTree& o) const {
    std::function<bool(int, int)> rec = [&](int a, int b) -> bool {
        if ((a < 0) != (b < 0)) return false;
        if (a < 0) return true;
        const Node& x = nodes_[static_cast<std::size_t>(a)];
        const Node& y = o.nodes_[static_cast<std::size_t>(b)];
        return x.label == y.label && rec(x.left, y.left) && rec(x.right, y.right);
    };
    return rec(root_, o.root_);
}

void IncreasingBinaryTree::validate() const {
    if (root_ < 0) {
        if (!nodes_.empty()) throw MalformedTreeError("nodes present without a root");
        return;
    }
    std::set<Letter> labels;
    std::size_t reached = 0;
    std::function<void(int)> rec = [&](int idx) {
        const Node& nd = node(idx);
        ++reached;
        if (!labels.insert(nd.label).second) throw MalformedTreeError("duplicate label");
        for (int c : {nd.left, nd.right}) {
            if (c < 0) continue;
            if (node(c).label <= nd.label)
                throw MalformedTreeError("labels must increase away from the root");
            rec(c);
        }
    };
    rec(root_);
    if (reached != nodes_.size()) throw MalformedTreeError("unreachable nodes");
    const std::size_t n = nodes_.size();
    if (*labels.begin() != 1 || *labels.rbegin() != n)
        throw MalformedTreeError("labels must form the set {1..n}");
}

// ---- TreeShape ----

const TreeShape::Node& TreeShape::node(int idx) const {
    if (idx < 0 || idx >= static_cast<int>(nodes_.size()))
        throw IndexOutOfRangeError("shape node index out of range");
    return nodes_[static_cast<std::size_t>(idx)];
}

int TreeShape::add_node() {
    nodes_.push_back(Node{-1, -1});
    return static_cast<int>(nodes_.size()) - 1;
}

void TreeShape::link(int parent, int left_child, int right_child) {
    nodes_[static_cast<std::size_t>(parent)].left = left_child;
    nodes_[static_cast<std::size_t>(parent)].right = right_child;
}

TreeShape TreeShape::parse(std::string_view text) {
    TreeShape s;
    std::size_t pos = 0;
    s.root_ = parse_node(
        text, pos, false, [&s](Letter) { return s.add_node(); },
        [&s](int p, int l, int r) { s.link(p, l, r); });
    skip_spaces(text, pos);
    if (pos != text.size()) throw MalformedTreeError("trailing characters after shape text");
    return s;
}

std::string TreeShape::serialize() const {
    std::function<std::string(int)> rec = [&](int idx) -> std::string {
        if (idx < 0) return ".";
        const Node& nd = nodes_[static_cast<std::size_t>(idx)];
        return "(* " + rec(nd.left) + " " + rec(nd.right) + ")";
    };
    return rec(root_);
}

bool TreeShape::operator==(const TreeShape& o) const {
    std::function<bool(int, int)> rec = [&](int a, int b) -> bool {
        if ((a < 0) != (b < 0)) return false;
        if (a < 0) return true;
        const Node& x = nodes_[static_cast<std::size_t>(a)];
        const Node& y = o.nodes_[static_cast<std::size_t>(b)];
        return rec(x.left, y.left) && rec(x.right, y.right);
    };
    return rec(root_, o.root_);
}

// ---- bijection and shape operations ----

IncreasingBinaryTree psi(const Permutation& p) {
    if (!p.is_standard()) throw NotStandardError("psi requires a standard permutation");
    IncreasingBinaryTree t;
    const auto& w = p.word();
    std::function<int(std::size_t, std::size_t)> build = [&](std::size_t lo, std::size_t hi) -> int {
        if (lo >= hi) return -1;
        std::size_t mpos = lo;
        for (std::size_t i = lo + 1; i < hi; ++i)
            if (w[i] < w[mpos]) mpos = i;
        int idx = t.add_node(w[mpos]);
        t.link(idx, build(lo, mpos), build(mpos + 1, hi));
        return idx;
    };
    t.set_root(build(0, w.size()));
    return t;
}

Permutation psi_inv(const IncreasingBinaryTree& t) {
    t.validate();
    std::vector<Letter> w;
    std::function<void(int)> rec = [&](int idx) {
        if (idx < 0) return;
        const auto& nd = t.node(idx);
        rec(nd.left);
        w.push_back(nd.label);
        rec(nd.right);
    };
    rec(t.root());
    return Permutation(std::move(w));
}

TreeShape shape(const IncreasingBinaryTree& t) {
    TreeShape s;
    std::function<int(int)> rec = [&](int idx) -> int {
        if (idx < 0) return -1;
        const auto& nd = t.node(idx);
        int copy = s.add_node();
        s.link(copy, rec(nd.left), rec(nd.right));
        return copy;
    };
    s.set_root(rec(t.root()));
    return s;
}

std::vector<int> des_from_shape(const TreeShape& s) {
    if (s.empty()) return {};
    // Smallest-label-first heap labeling: breadth-first numbering keeps every
    // child label above its parent's.
    IncreasingBinaryTree t;
    std::vector<int> mapped(s.size(), -1);
    std::deque<int> queue{s.root()};
    Letter next = 1;
    std::vector<int> order;
    while (!queue.empty()) {
        int idx = queue.front();
        queue.pop_front();
        mapped[static_cast<std::size_t>(idx)] = t.add_node(next++);
        order.push_back(idx);
        if (s.node(idx).left >= 0) queue.push_back(s.node(idx).left);
        if (s.node(idx).right >= 0) queue.push_back(s.node(idx).right);
    }
    for (int idx : order) {
        const auto& nd = s.node(idx);
        t.link(mapped[static_cast<std::size_t>(idx)],
               nd.left >= 0 ? mapped[static_cast<std::size_t>(nd.left)] : -1,
               nd.right >= 0 ? mapped[static_cast<std::size_t>(nd.right)] : -1);
    }
    t.set_root(mapped[static_cast<std::size_t>(s.root())]);
    return descent_set(psi_inv(t));
}

namespace {

Letter subtree_max(const IncreasingBinaryTree& t, int idx) {
    if (idx < 0) return 0;
    const auto& nd = t.node(idx);
    return std::max({nd.label, subtree_max(t, nd.left), subtree_max(t, nd.right)});
}

Letter subtree_min(const IncreasingBinaryTree& t, int idx) {
    // an increasing tree's minimum sits at the subtree root
    return idx < 0 ? ~Letter{0} : t.node(idx).label;
}

} // namespace

bool is_andre1_tree(const IncreasingBinaryTree& t) {
    t.validate();
    std::function<bool(int)> rec = [&](int idx) -> bool {
        if (idx < 0) return true;
        const auto& nd = t.node(idx);
        if (nd.left >= 0 || nd.right >= 0) {
            Letter m = std::max(subtree_max(t, nd.left), subtree_max(t, nd.right));
            if (subtree_max(t, nd.right) != m) return false;
        }
        return rec(nd.left) && rec(nd.right);
    };
    return rec(t.root());
}

bool is_andre2_tree(const IncreasingBinaryTree& t) {
    t.validate();
    std::function<bool(int)> rec = [&](int idx) -> bool {
        if (idx < 0) return true;
        const auto& nd = t.node(idx);
        if (nd.left >= 0 || nd.right >= 0) {
            Letter m = std::min(subtree_min(t, nd.left), subtree_min(t, nd.right));
            if (subtree_min(t, nd.right) != m) return false;
        }
        return rec(nd.left) && rec(nd.right);
    };
    return rec(t.root());
}

bool is_simsun_tree(const IncreasingBinaryTree& t) {
    t.validate();
    if (t.empty()) return true;
    const auto n = static_cast<Letter>(t.size());
    int cur = t.root();
    while (t.node(cur).right >= 0) cur = t.node(cur).right;
    if (t.node(cur).label != n) return false;         // n is the right-most vertex

    // Ancestor paths never lose vertices before their descendants do (labels
    // decrease toward the root), so "lies in a left subtree" is static.
    std::vector<bool> in_left(t.size(), false);
    std::function<void(int, bool)> mark = [&](int idx, bool left) {
        if (idx < 0) return;
        in_left[static_cast<std::size_t>(idx)] = left;
        mark(t.node(idx).left, true);
        mark(t.node(idx).right, left);
    };
    mark(t.root(), false);

    // Stage j keeps the labels <= j; deletion of the largest label always
    // removes a leaf, so only child-aliveness changes per stage.
    for (Letter j = n; j >= 1; --j) {
        for (std::size_t idx = 0; idx < t.size(); ++idx) {
            const auto& nd = t.node(static_cast<int>(idx));
            if (nd.label > j || !in_left[idx]) continue;
            bool left_alive = nd.left >= 0 && t.node(nd.left).label <= j;
            bool right_alive = nd.right >= 0 && t.node(nd.right).label <= j;
            if (left_alive && !right_alive) return false;
        }
    }
    return true;
}

std::vector<TreeShape> enumerate_url(int n, int cap) {
    if (n < 1) throw BadBoundsError("shape enumeration requires n >= 1");
    if (n > cap) throw ResourceLimitError("shape enumeration length exceeds the cap");
    // Build bracket texts recursively; a nonempty left subtree demands a
    // nonempty right subtree at every vertex.
    std::function<std::vector<std::string>(int)> gen = [&](int sz) -> std::vector<std::string> {
        if (sz == 0) return {"."};
        std::vector<std::string> out;
        for (int ls = 0; ls < sz; ++ls) {
            int rs = sz - 1 - ls;
            if (ls > 0 && rs == 0) continue;
            for (const auto& l : gen(ls))
                for (const auto& r : gen(rs)) out.push_back("(* " + l + " " + r + ")");
        }
        return out;
    };
    std::vector<std::string> texts = gen(n);
    std::sort(texts.begin(), texts.end());
    std::vector<TreeShape> out;
    out.reserve(texts.size());
    for (const auto& s : texts) out.push_back(TreeShape::parse(s));
    return out;
}

std::vector<long long> motzkin_numbers(int upto) {
    if (upto < 0) throw BadBoundsError("negative index");
    std::vector<long long> m{1};
    for (int k = 1; k <= upto; ++k) {
        long long v = m[static_cast<std::size_t>(k) - 1];
        for (int i = 0; i + 2 <= k; ++i) v += m[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(k - 2 - i)];
        m.push_back(v);
    }
    return m;
}

std::vector<std::pair<Letter, Letter>> tree_inversions(const IncreasingBinaryTree& t) {
    t.validate();
    std::vector<std::pair<Letter, Letter>> out;
    if (t.empty()) return out;

    // Root path per label, found once; the path to label i collects (a) the
    // right subtrees hanging off left steps (vertices right of the path) and
    // (b) ancestors whose left child continues the path.
    std::function<bool(int, Letter, std::vector<int>&)> path_to = [&](int idx, Letter target,
                                                                      std::vector<int>& acc) -> bool {
        if (idx < 0) return false;
        acc.push_back(idx);
        if (t.node(idx).label == target) return true;
        if (path_to(t.node(idx).left, target, acc)) return true;
        if (path_to(t.node(idx).right, target, acc)) return true;
        acc.pop_back();
        return false;
    };
    std::function<void(int, std::vector<Letter>&)> collect = [&](int idx, std::vector<Letter>& labels) {
        if (idx < 0) return;
        labels.push_back(t.node(idx).label);
        collect(t.node(idx).left, labels);
        collect(t.node(idx).right, labels);
    };

    const auto n = static_cast<Letter>(t.size());
    for (Letter i = 2; i <= n; ++i) {
        std::vector<int> path;
        path_to(t.root(), i, path);
        std::vector<Letter> smaller;
        for (std::size_t a = 0; a + 1 < path.size(); ++a) {
            const auto& nd = t.node(path[a]);
            if (nd.left == path[a + 1]) {
                smaller.push_back(nd.label);                 // left child on the path
                collect(nd.right, smaller);                  // right of the path
            }
        }
        for (Letter j : smaller)
            if (j < i) out.emplace_back(i, j);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Letter> tree_idescents(const IncreasingBinaryTree& t) {
    std::vector<Letter> out;
    for (const auto& [i, j] : tree_inversions(t))
        if (i == j + 1) out.push_back(j);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Letter> r_set(const IncreasingBinaryTree& t) {
    std::vector<Letter> out;
    int idx = t.root();
    while (idx >= 0) {
        out.push_back(t.node(idx).label);
        idx = t.node(idx).right;
    }
    return out;                                        // spine labels increase downward
}

} // namespace eulerperm
