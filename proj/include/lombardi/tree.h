#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lombardi {

// Rooted tree with dense internal ids 0..n-1; external labels in a side
// table. Child lists keep the input (cyclic) order even for unordered trees.
struct Tree {
    int n = 0;
    int root = -1;
    bool ordered = false;
    std::vector<int> parent;                 // -1 at the root
    std::vector<std::vector<int>> children;  // counterclockwise after the parent edge
    std::vector<std::string> labels;

    // Degree includes the parent edge; the root's degree is its child count.
    int degree(int v) const {
        return static_cast<int>(children[v].size()) + (v == root ? 0 : 1);
    }
    bool is_leaf(int v) const { return children[v].empty(); }

    void validate() const;  // throws std::invalid_argument on broken invariants
};

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, int line)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ")"),
          line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

enum class TreeFormat { EdgeList, NestedParen };

// Edge-list: line 1 = "<n> <ordered|unordered>", then "<parent> <child>" per
// line, children in counterclockwise order. Nested-paren:
// "(child1,child2,...)label", leaf = "label"; parenthesized input carries an
// embedding, so it parses as ordered. '#' starts a comment line.
Tree parse_tree(const std::string& text, TreeFormat format);

std::string to_edge_list(const Tree& t);

struct HeavyPathDecomposition {
    std::vector<int> subtree_size;  // |T_u|
    std::vector<int> heavy_child;   // -1 at leaves
    std::vector<int> light_size;    // l(u) = 1 + sum of light subtree sizes
    std::vector<int> level;         // depth of the node's path in H(T)
    std::vector<int> path_id;
    std::vector<int> pos_in_path;
    std::vector<std::vector<int>> paths;  // head (nearest the root) first
    int height = 0;                       // h(T)

    int path_of(int v) const { return path_id[v]; }
    int n_of_path(int p) const { return subtree_size[paths[p][0]]; }
};

std::vector<int> subtree_sizes(const Tree& t);

// Heavy child = earliest child of maximal subtree size (deterministic
// tie-break).
HeavyPathDecomposition decompose(const Tree& t);

// Children of u minus the heavy child, preserving stored order.
std::vector<int> light_children(const Tree& t, const HeavyPathDecomposition& d,
                                int u);

}  // namespace lombardi
