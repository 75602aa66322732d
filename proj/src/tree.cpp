#include "lombardi/tree.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace lombardi {

void Tree::validate() const {
    if (n <= 0) throw std::invalid_argument("tree: empty");
    if (root < 0 || root >= n) throw std::invalid_argument("tree: bad root");
    std::vector<int> seen(n, 0);
    std::vector<int> stack{root};
    int count = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (seen[v]++) throw std::invalid_argument("tree: node reached twice");
        ++count;
        for (int c : children[v]) {
            if (c < 0 || c >= n || parent[c] != v)
                throw std::invalid_argument("tree: parent/child mismatch");
            stack.push_back(c);
        }
    }
    if (count != n) throw std::invalid_argument("tree: not connected");
    if (parent[root] != -1) throw std::invalid_argument("tree: root has a parent");
}

namespace {

std::vector<std::string> split_lines_strip_comments(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') line.clear();
        lines.push_back(line);
    }
    return lines;
}

Tree parse_edge_list(const std::string& text) {
    auto lines = split_lines_strip_comments(text);
    size_t li = 0;
    while (li < lines.size() &&
           lines[li].find_first_not_of(" \t\r") == std::string::npos)
        ++li;
    if (li >= lines.size()) throw ParseError("empty input", 1);

    std::istringstream head(lines[li]);
    long long n = 0;
    std::string flag;
    if (!(head >> n >> flag) || n <= 0)
        throw ParseError("expected header \"<n> <ordered|unordered>\"",
                         static_cast<int>(li + 1));
    bool ordered;
    if (flag == "ordered")
        ordered = true;
    else if (flag == "unordered")
        ordered = false;
    else
        throw ParseError("expected ordered|unordered, got \"" + flag + "\"",
                         static_cast<int>(li + 1));

    std::map<std::string, int> ids;
    std::vector<std::string> labels;
    auto intern = [&](const std::string& s) {
        auto it = ids.find(s);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(labels.size());
        ids.emplace(s, id);
        labels.push_back(s);
        return id;
    };

    std::vector<int> parent;
    std::vector<std::vector<int>> children;
    auto grow = [&](int id) {
        while (static_cast<int>(parent.size()) <= id) {
            parent.push_back(-2);  // -2 = unseen
            children.emplace_back();
        }
    };

    for (size_t i = li + 1; i < lines.size(); ++i) {
        std::istringstream es(lines[i]);
        std::string ps, cs, extra;
        if (!(es >> ps)) continue;
        if (!(es >> cs)) {
            // single token: a lone node declaration (covers n = 1)
            grow(intern(ps));
            continue;
        }
        if (es >> extra)
            throw ParseError("expected \"<parent> <child>\"", static_cast<int>(i + 1));
        int p = intern(ps), c = intern(cs);
        grow(std::max(p, c));
        if (p == c) throw ParseError("self-loop at \"" + ps + "\"", static_cast<int>(i + 1));
        if (parent[c] >= 0)
            throw ParseError("duplicate node id \"" + cs + "\"", static_cast<int>(i + 1));
        parent[c] = p;
        if (parent[p] == -2) parent[p] = -1;  // seen, still a root candidate
        children[p].push_back(c);
    }
    std::vector<int> roots;
    for (size_t v = 0; v < parent.size(); ++v) {
        if (parent[v] == -2) parent[v] = -1;
        if (parent[v] == -1) roots.push_back(static_cast<int>(v));
    }
    if (static_cast<long long>(parent.size()) != n)
        throw ParseError("header says " + std::to_string(n) + " nodes, found " +
                             std::to_string(parent.size()),
                         1);
    if (roots.empty()) throw ParseError("no root (cycle in input)", 1);
    if (roots.size() > 1)
        throw ParseError("multiple roots / disconnected input", 1);

    Tree t;
    t.n = static_cast<int>(n);
    t.root = roots[0];
    t.ordered = ordered;
    t.parent = std::move(parent);
    t.children = std::move(children);
    t.labels = std::move(labels);
    t.validate();
    return t;
}

struct ParenParser {
    const std::string& s;
    size_t pos = 0;
    int line = 1;

    explicit ParenParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() &&
               (std::isspace(static_cast<unsigned char>(s[pos])) || s[pos] == '#')) {
            if (s[pos] == '#') {
                while (pos < s.size() && s[pos] != '\n') ++pos;
            } else {
                if (s[pos] == '\n') ++line;
                ++pos;
            }
        }
    }
    bool at(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    void expect(char c) {
        if (!at(c)) throw ParseError(std::string("expected '") + c + "'", line);
        ++pos;
    }
    std::string label() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) &&
               s[pos] != '(' && s[pos] != ')' && s[pos] != ',' && s[pos] != '#')
            ++pos;
        if (pos == start) throw ParseError("expected a label", line);
        return s.substr(start, pos - start);
    }

    std::map<std::string, int> seen;

    // returns node id
    int node(Tree& t) {
        std::vector<int> kids;
        if (at('(')) {
            ++pos;
            kids.push_back(node(t));
            while (at(',')) {
                ++pos;
                kids.push_back(node(t));
            }
            expect(')');
        }
        std::string lab = label();
        if (!seen.emplace(lab, 0).second)
            throw ParseError("duplicate node id \"" + lab + "\"", line);
        int id = static_cast<int>(t.labels.size());
        t.labels.push_back(lab);
        t.parent.push_back(-1);
        t.children.push_back(kids);
        for (int k : kids) t.parent[k] = id;
        return id;
    }
};

Tree parse_nested_paren(const std::string& text) {
    Tree t;
    ParenParser pp(text);
    t.root = pp.node(t);
    pp.skip_ws();
    if (pp.pos != text.size())
        throw ParseError("trailing input after tree", pp.line);
    t.n = static_cast<int>(t.labels.size());
    t.ordered = true;
    t.validate();
    return t;
}

}  // namespace

Tree parse_tree(const std::string& text, TreeFormat format) {
    if (text.empty()) throw ParseError("empty input", 1);
    return format == TreeFormat::EdgeList ? parse_edge_list(text)
                                          : parse_nested_paren(text);
}

std::string to_edge_list(const Tree& t) {
    std::ostringstream out;
    out << t.n << ' ' << (t.ordered ? "ordered" : "unordered") << '\n';
    std::vector<int> stack{t.root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int c : t.children[v]) out << t.labels[v] << ' ' << t.labels[c] << '\n';
        for (auto it = t.children[v].rbegin(); it != t.children[v].rend(); ++it)
            stack.push_back(*it);
    }
    return out.str();
}

std::vector<int> subtree_sizes(const Tree& t) {
    std::vector<int> size(t.n, 1);
    // children before parents: iterative post-order
    std::vector<int> order;
    order.reserve(t.n);
    std::vector<int> stack{t.root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int c : t.children[v]) stack.push_back(c);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        for (int c : t.children[*it]) size[*it] += size[c];
    return size;
}

HeavyPathDecomposition decompose(const Tree& t) {
    HeavyPathDecomposition d;
    d.subtree_size = subtree_sizes(t);
    d.heavy_child.assign(t.n, -1);
    d.light_size.assign(t.n, 1);
    for (int v = 0; v < t.n; ++v) {
        int best = -1, best_size = 0;
        for (int c : t.children[v]) {
            if (d.subtree_size[c] > best_size) {
                best = c;
                best_size = d.subtree_size[c];
            }
        }
        d.heavy_child[v] = best;
        for (int c : t.children[v])
            if (c != best) d.light_size[v] += d.subtree_size[c];
    }
    d.level.assign(t.n, 0);
    d.path_id.assign(t.n, -1);
    d.pos_in_path.assign(t.n, -1);
    d.height = 0;

    // heads of paths: the root and every light child
    std::vector<std::pair<int, int>> heads{{t.root, 0}};  // (head, level)
    size_t qi = 0;
    while (qi < heads.size()) {
        auto [head, lvl] = heads[qi++];
        int pid = static_cast<int>(d.paths.size());
        d.paths.emplace_back();
        int v = head;
        while (true) {
            d.path_id[v] = pid;
            d.level[v] = lvl;
            d.pos_in_path[v] = static_cast<int>(d.paths[pid].size());
            d.paths[pid].push_back(v);
            for (int c : t.children[v])
                if (c != d.heavy_child[v]) heads.emplace_back(c, lvl + 1);
            if (d.heavy_child[v] < 0) break;
            v = d.heavy_child[v];
        }
        d.height = std::max(d.height, lvl);
    }
    return d;
}

std::vector<int> light_children(const Tree& t, const HeavyPathDecomposition& d,
                                int u) {
    std::vector<int> out;
    for (int c : t.children[u])
        if (c != d.heavy_child[u]) out.push_back(c);
    return out;
}

}  // namespace lombardi
