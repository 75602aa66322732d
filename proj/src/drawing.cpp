#include "lombardi/drawing.h"

#include <stdexcept>

namespace lombardi {

std::vector<std::pair<int, int>> canonical_edges(const Tree& t) {
    std::vector<std::pair<int, int>> out;
    out.reserve(t.n > 0 ? t.n - 1 : 0);
    std::vector<int> stack{t.root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int c : t.children[v]) out.emplace_back(v, c);
        for (auto it = t.children[v].rbegin(); it != t.children[v].rend(); ++it)
            stack.push_back(*it);
    }
    return out;
}

std::string mode_name(DrawingMode m) {
    switch (m) {
        case DrawingMode::Straight: return "straight";
        case DrawingMode::Lombardi: return "lombardi";
        case DrawingMode::External: return "external";
    }
    return "external";
}

DrawingMode mode_from_name(const std::string& s) {
    if (s == "straight") return DrawingMode::Straight;
    if (s == "lombardi") return DrawingMode::Lombardi;
    if (s == "external") return DrawingMode::External;
    throw std::invalid_argument("unknown drawing mode: " + s);
}

}  // namespace lombardi
