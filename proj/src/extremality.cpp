#include "dsm/extremality.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dsm {

BipartiteSupportGraph support_graph(const UMatrix& M) {
    return BipartiteSupportGraph{M.rows(), M.cols(), support(M)};
}

std::string CycleWitness::str() const {
    std::ostringstream out;
    for (size_t k = 0; k < cells.size(); ++k) {
        if (k) out << ' ';
        out << '(' << cells[k].first + 1 << ',' << cells[k].second + 1 << ')';
    }
    return out.str();
}

namespace {

// Nodes are numbered rows first: x_i -> i, y_j -> rows + j.
std::vector<std::vector<int>> adjacency(const BipartiteSupportGraph& G) {
    std::vector<std::vector<int>> adj(G.rows + G.cols);
    for (const Cell& e : G.edges) {
        adj[e.first].push_back(G.rows + e.second);
        adj[G.rows + e.second].push_back(e.first);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

// Rotates/orients a node cycle (alternating row, col, row, col, ...) into the
// normalized cell sequence: start at the smallest row, first hop along the
// smaller of that row's two cycle columns.
CycleWitness normalize_cycle(const std::vector<int>& nodes, int rows) {
    const size_t len = nodes.size();
    size_t start = 0;
    for (size_t k = 0; k < len; ++k) {
        if (nodes[k] < rows && (nodes[start] >= rows || nodes[k] < nodes[start])) {
            start = k;
        }
    }
    const int next_col = nodes[(start + 1) % len] - rows;
    const int prev_col = nodes[(start + len - 1) % len] - rows;
    const bool forward = next_col < prev_col;

    CycleWitness w;
    w.cells.reserve(len);
    for (size_t step = 0; step < len; ++step) {
        const size_t k = forward ? (start + step) % len : (start + len - step) % len;
        const size_t k2 = forward ? (k + 1) % len : (k + len - 1) % len;
        const int a = nodes[k], b = nodes[k2];
        // Emit the cell joining consecutive nodes; pairs alternate row->col.
        const int r = a < rows ? a : b;
        const int c = (a < rows ? b : a) - rows;
        w.cells.emplace_back(r, c);
    }
    return w;
}

}  // namespace

std::optional<CycleWitness> find_cycle(const BipartiteSupportGraph& G) {
    const int total = G.rows + G.cols;
    const auto adj = adjacency(G);
    std::vector<int> parent(total, -1);
    std::vector<char> visited(total, 0);

    for (int root = 0; root < G.rows; ++root) {
        if (visited[root]) continue;
        // Iterative DFS; each frame remembers how far down the neighbor list
        // it has scanned so neighbors are taken in ascending order.
        std::vector<std::pair<int, size_t>> stack;
        visited[root] = 1;
        stack.emplace_back(root, 0);
        while (!stack.empty()) {
            auto& [node, next] = stack.back();
            if (next >= adj[node].size()) {
                stack.pop_back();
                continue;
            }
            const int nbr = adj[node][next++];
            if (nbr == parent[node]) continue;
            if (visited[nbr]) {
                // Back edge: nbr is an ancestor on the DFS stack. Walk up.
                std::vector<int> nodes;
                for (int v = node; v != nbr; v = parent[v]) nodes.push_back(v);
                nodes.push_back(nbr);
                return normalize_cycle(nodes, G.rows);
            }
            visited[nbr] = 1;
            parent[nbr] = node;
            stack.emplace_back(nbr, 0);
        }
    }
    return std::nullopt;
}

bool is_extremal(const UMatrix& M) {
    if (!validate(M).is_member) {
        throw std::invalid_argument("is_extremal: matrix is not a member; " +
                                    validate(M).summary());
    }
    return !find_cycle(support_graph(M)).has_value();
}

namespace {

void check_witness(const UMatrix& M, const CycleWitness& w) {
    const size_t len = w.cells.size();
    if (len < 4 || len % 2 != 0) {
        throw std::invalid_argument("split_on_cycle: witness must have even length >= 4");
    }
    std::set<Cell> seen;
    for (size_t k = 0; k < len; ++k) {
        const Cell& cell = w.cells[k];
        if (cell.first < 0 || cell.first >= M.rows() || cell.second < 0 ||
            cell.second >= M.cols()) {
            throw std::invalid_argument("split_on_cycle: witness cell out of bounds");
        }
        if (M.at(cell.first, cell.second).is_zero()) {
            throw std::invalid_argument("split_on_cycle: witness cell not in support");
        }
        if (!seen.insert(cell).second) {
            throw std::invalid_argument("split_on_cycle: repeated witness cell");
        }
        const Cell& next = w.cells[(k + 1) % len];
        const bool share_col = k % 2 == 0;
        if (share_col ? (cell.second != next.second) : (cell.first != next.first)) {
            throw std::invalid_argument("split_on_cycle: cells do not alternate row/column");
        }
    }
}

}  // namespace

CycleSplit split_on_cycle(const UMatrix& M, const CycleWitness& w) {
    if (!validate(M).is_member) {
        throw std::invalid_argument("split_on_cycle: matrix is not a member");
    }
    check_witness(M, w);

    // Even-indexed cells receive +theta, odd-indexed -theta; the alternation
    // pattern gives each touched row and column one of each, so marginals are
    // preserved. theta_plus is the largest step against the odd cells,
    // theta_minus against the even cells.
    std::optional<Rational> theta_plus, theta_minus;
    for (size_t k = 0; k < w.cells.size(); ++k) {
        const Rational& e = M.at(w.cells[k].first, w.cells[k].second);
        auto& bound = (k % 2 == 1) ? theta_plus : theta_minus;
        if (!bound || e < *bound) bound = e;
    }

    CycleSplit split{Rational(0), M, M};
    for (size_t k = 0; k < w.cells.size(); ++k) {
        const auto [i, j] = w.cells[k];
        if (k % 2 == 0) {
            split.plus.at(i, j) += *theta_plus;
            split.minus.at(i, j) -= *theta_minus;
        } else {
            split.plus.at(i, j) -= *theta_plus;
            split.minus.at(i, j) += *theta_minus;
        }
    }
    split.lambda = *theta_minus / (*theta_plus + *theta_minus);
    return split;
}

ConvexDecomposition decompose(const UMatrix& M) {
    if (!validate(M).is_member) {
        throw std::invalid_argument("decompose: matrix is not a member; " +
                                    validate(M).summary());
    }

    std::map<UMatrix, Rational, decltype(&UMatrix::lex_less)> terms(&UMatrix::lex_less);
    std::vector<std::pair<Rational, UMatrix>> work;
    work.emplace_back(Rational(1), M);
    while (!work.empty()) {
        auto [coeff, current] = std::move(work.back());
        work.pop_back();
        const auto cycle = find_cycle(support_graph(current));
        if (!cycle) {
            auto [it, inserted] = terms.emplace(std::move(current), coeff);
            if (!inserted) it->second += coeff;
            continue;
        }
        CycleSplit split = split_on_cycle(current, *cycle);
        const Rational rest = Rational(1) - split.lambda;
        work.emplace_back(coeff * split.lambda, std::move(split.plus));
        work.emplace_back(coeff * rest, std::move(split.minus));
    }

    ConvexDecomposition result;
    result.terms.reserve(terms.size());
    for (auto& [matrix, coeff] : terms) {
        result.terms.emplace_back(coeff, matrix);
    }
    return result;
}

std::optional<UMatrix> subsupport_witness(const UMatrix& M) {
    if (!validate(M).is_member) {
        throw std::invalid_argument("subsupport_witness: matrix is not a member");
    }
    const auto cycle = find_cycle(support_graph(M));
    if (!cycle) return std::nullopt;
    return split_on_cycle(M, *cycle).plus;
}

std::string to_dot(const UMatrix& M) {
    const BipartiteSupportGraph G = support_graph(M);
    std::set<Cell> marked;
    if (const auto cycle = find_cycle(G)) {
        marked.insert(cycle->cells.begin(), cycle->cells.end());
    }
    std::ostringstream out;
    out << "graph support {\n";
    for (int i = 0; i < G.rows; ++i) {
        out << "  x" << i + 1 << " [shape=box];\n";
    }
    for (int j = 0; j < G.cols; ++j) {
        out << "  y" << j + 1 << " [shape=circle];\n";
    }
    for (const Cell& e : G.edges) {
        out << "  x" << e.first + 1 << " -- y" << e.second + 1 << " [label=\""
            << M.at(e.first, e.second) << "\"";
        if (marked.count(e)) out << ", color=red, penwidth=2";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace dsm
