#include "dsm/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "dsm/errors.hpp"
#include "dsm/matrix_io.hpp"

namespace dsm {

namespace {

void check_cells_in_bounds(long long n, long long m, const SupportSet& S) {
    for (const Cell& c : S) {
        if (c.first < 0 || c.first >= n || c.second < 0 || c.second >= m) {
            throw std::invalid_argument("support cell (" + std::to_string(c.first) + "," +
                                        std::to_string(c.second) + ") out of bounds");
        }
    }
}

// Plain Edmonds-Karp on a small adjacency-list network, exact integer
// capacities throughout.
class MaxFlow {
public:
    explicit MaxFlow(int nodes) : head_(nodes, -1) {}

    void add_edge(int from, int to, long long capacity) {
        edges_.push_back({to, head_[from], capacity});
        head_[from] = static_cast<int>(edges_.size()) - 1;
        edges_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(edges_.size()) - 1;
    }

    long long run(int source, int sink) {
        long long total = 0;
        std::vector<int> via(head_.size());
        while (true) {
            std::fill(via.begin(), via.end(), -1);
            std::deque<int> queue{source};
            via[source] = -2;
            while (!queue.empty() && via[sink] == -1) {
                const int u = queue.front();
                queue.pop_front();
                for (int e = head_[u]; e != -1; e = edges_[e].next) {
                    if (edges_[e].capacity > 0 && via[edges_[e].to] == -1) {
                        via[edges_[e].to] = e;
                        queue.push_back(edges_[e].to);
                    }
                }
            }
            if (via[sink] == -1) break;
            long long push = std::numeric_limits<long long>::max();
            for (int v = sink; v != source;) {
                const Edge& e = edges_[via[v]];
                push = std::min(push, e.capacity);
                v = edges_[via[v] ^ 1].to;
            }
            for (int v = sink; v != source;) {
                edges_[via[v]].capacity -= push;
                edges_[via[v] ^ 1].capacity += push;
                v = edges_[via[v] ^ 1].to;
            }
            total += push;
        }
        return total;
    }

private:
    struct Edge {
        int to;
        int next;
        long long capacity;
    };
    std::vector<int> head_;
    std::vector<Edge> edges_;
};

bool feasible_cells(long long n, long long m, const std::vector<Cell>& cells) {
    const int source = 0, sink = 1;
    MaxFlow flow(static_cast<int>(2 + n + m));
    for (long long i = 0; i < n; ++i) {
        flow.add_edge(source, static_cast<int>(2 + i), m);
    }
    for (long long j = 0; j < m; ++j) {
        flow.add_edge(static_cast<int>(2 + n + j), sink, n);
    }
    // n*m is a safe stand-in for an unbounded interior capacity.
    for (const Cell& c : cells) {
        flow.add_edge(static_cast<int>(2 + c.first), static_cast<int>(2 + n + c.second), n * m);
    }
    return flow.run(source, sink) == n * m;
}

}  // namespace

bool feasible_support(long long n, long long m, const SupportSet& S) {
    if (n < 1 || m < 1) {
        throw std::domain_error("feasible_support: dimensions must be positive");
    }
    check_cells_in_bounds(n, m, S);
    return feasible_cells(n, m, std::vector<Cell>(S.begin(), S.end()));
}

std::optional<UMatrix> solve_forest(long long n, long long m, const SupportSet& S) {
    if (n < 1 || m < 1) {
        throw std::domain_error("solve_forest: dimensions must be positive");
    }
    if (n > UMatrix::kMaxDim || m > UMatrix::kMaxDim) {
        throw capacity_error("solve_forest: dimensions limited to " +
                             std::to_string(UMatrix::kMaxDim));
    }
    check_cells_in_bounds(n, m, S);

    const int total_nodes = static_cast<int>(n + m);
    const std::vector<Cell> cells(S.begin(), S.end());

    // Union-find acyclicity check; a cyclic support is a caller error.
    std::vector<int> root(total_nodes);
    std::iota(root.begin(), root.end(), 0);
    const auto find = [&](int v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };
    for (const Cell& c : cells) {
        const int a = find(c.first), b = find(static_cast<int>(n) + c.second);
        if (a == b) {
            throw std::invalid_argument("solve_forest: support contains a cycle");
        }
        root[a] = b;
    }

    std::vector<std::vector<int>> incident(total_nodes);
    for (size_t e = 0; e < cells.size(); ++e) {
        incident[cells[e].first].push_back(static_cast<int>(e));
        incident[static_cast<int>(n) + cells[e].second].push_back(static_cast<int>(e));
    }
    std::vector<int> degree(total_nodes);
    std::vector<long long> demand(total_nodes);
    for (int v = 0; v < total_nodes; ++v) {
        degree[v] = static_cast<int>(incident[v].size());
        demand[v] = v < n ? m : n;
    }

    std::vector<long long> value(cells.size(), 0);
    std::vector<char> solved(cells.size(), 0);
    std::vector<int> leaves;
    for (int v = 0; v < total_nodes; ++v) {
        if (degree[v] == 1) leaves.push_back(v);
    }
    // Each elimination fixes the unique live cell at a degree-1 node to that
    // node's remaining demand; on a forest this consumes every cell.
    while (!leaves.empty()) {
        const int v = leaves.back();
        leaves.pop_back();
        if (degree[v] != 1) continue;
        int edge = -1;
        for (int e : incident[v]) {
            if (!solved[e]) edge = e;
        }
        value[edge] = demand[v];
        solved[edge] = 1;
        const int other = (v < n) ? static_cast<int>(n) + cells[edge].second : cells[edge].first;
        demand[v] = 0;
        demand[other] -= value[edge];
        --degree[v];
        if (--degree[other] == 1) leaves.push_back(other);
    }

    for (size_t e = 0; e < cells.size(); ++e) {
        if (!solved[e] || value[e] <= 0) return std::nullopt;
    }
    for (int v = 0; v < total_nodes; ++v) {
        if (demand[v] != 0) return std::nullopt;
    }

    UMatrix M(static_cast<int>(n), static_cast<int>(m));
    for (size_t e = 0; e < cells.size(); ++e) {
        M.at(cells[e].first, cells[e].second) = Rational(value[e]);
    }
    return M;
}

namespace {

// Column-by-column growth of acyclic supports with positive integer entries.
// State: remaining row demands, union-find over rows (columns are absorbed at
// placement), cells used so far. Any completed assignment is a vertex; the
// prunes only cut branches that cannot complete.
//
//  - budget: a forest on n+m nodes has at most n+m-1 edges, and every
//    remaining column needs at least one cell;
//  - demand: row i needs at least ceil(d_i / n) more cells (no cell exceeds
//    the column sum n);
//  - fractional rows: a row with d_i not a multiple of n needs a cell of
//    value < n, and only multi-cell columns provide those, at most two per
//    unit of budget slack;
//  - failure memo: whether the remaining columns can be completed depends
//    only on the remaining column count, the cell budget, and the component
//    partition with its demand multisets. States proved barren are recorded
//    under that canonical key, which collapses the many isomorphic dead
//    subtrees square-ish instances produce.
class ColumnDfs {
public:
    ColumnDfs(int n, int m, int max_cells, int exact_cells,
              const std::function<bool(uint64_t, int)>& emit)
        : n_(n), m_(m), max_cells_(max_cells), exact_cells_(exact_cells), emit_(emit) {
        demand_.assign(n_, m_);
        comp_.resize(n_);
        std::iota(comp_.begin(), comp_.end(), 0);
    }

    // Returns false when the emit callback asked to stop.
    bool run() { return descend_column(0); }

private:
    using StateKey = std::pair<uint64_t, uint64_t>;

    // Nibble-packs (remaining columns, budget left, sorted component demand
    // multisets). Rows within a component and whole components are
    // interchangeable for feasibility, so both levels are sorted.
    StateKey state_key(int col) const {
        // One word per component: (size << 32) | demand nibbles, demands
        // sorted descending within the word.
        std::array<uint64_t, 8> comp_words{};
        std::array<int8_t, 8> owner{};
        owner.fill(-1);
        int comp_count = 0;
        for (int i = 0; i < n_; ++i) {
            const int rep = find(i);
            if (owner[rep] < 0) owner[rep] = static_cast<int8_t>(comp_count++);
            const int c = owner[rep];
            int len = static_cast<int>(comp_words[c] >> 32);
            uint64_t nibbles = comp_words[c] & 0xFFFFFFFFull;
            const uint64_t d = static_cast<uint64_t>(demand_[i]);
            int pos = len;
            while (pos > 0 && ((nibbles >> (4 * (pos - 1))) & 0xF) < d) {
                nibbles |= ((nibbles >> (4 * (pos - 1))) & 0xF) << (4 * pos);
                nibbles &= ~(0xFull << (4 * (pos - 1)));
                --pos;
            }
            nibbles |= d << (4 * pos);
            comp_words[c] = (static_cast<uint64_t>(len + 1) << 32) | nibbles;
        }
        std::sort(comp_words.begin(), comp_words.begin() + comp_count);

        // Stream the sorted comps as demand nibbles with 0xF separators,
        // then the remaining-column and budget nibbles.
        uint64_t low = 0, high = 0;
        int cursor = 0;
        const auto push = [&](uint64_t nibble) {
            if (cursor < 16) {
                low |= nibble << (4 * cursor);
            } else {
                high |= nibble << (4 * (cursor - 16));
            }
            ++cursor;
        };
        for (int c = 0; c < comp_count; ++c) {
            const int len = static_cast<int>(comp_words[c] >> 32);
            for (int k = 0; k < len; ++k) {
                push((comp_words[c] >> (4 * k)) & 0xF);
            }
            push(0xF);
        }
        push(static_cast<uint64_t>(m_ - col));
        push(static_cast<uint64_t>(max_cells_ - cells_used_));
        return {low, high};
    }

    bool descend_column(int col) {
        if (col == m_) {
            // Column sums consumed exactly n per column, so demands are zero.
            if (exact_cells_ >= 0 && cells_used_ != exact_cells_) return true;
            ++emitted_;
            return emit_(mask_, cells_used_);
        }
        if (col == 0 || col + 1 == m_) {
            return place_cells(col, 0, n_, 0);
        }
        const StateKey key = state_key(col);
        if (barren_.count(key)) return true;
        const long long before = emitted_;
        const bool keep_going = place_cells(col, 0, n_, 0);
        if (keep_going && emitted_ == before) {
            barren_.insert(key);
        }
        return keep_going;
    }

    // Chooses this column's support among rows i.., with `residual` of the
    // column sum left to place. used_comps holds the components already
    // touched by this column; reusing one would close a cycle.
    bool place_cells(int col, int row, int residual, unsigned used_comps) {
        if (residual == 0) {
            return close_column(col, used_comps);
        }
        if (row == n_) return true;

        long long suffix = 0;
        for (int i = row; i < n_; ++i) suffix += demand_[i];
        if (suffix < residual) return true;

        // Skip this row entirely.
        if (!place_cells(col, row + 1, residual, used_comps)) return false;

        const int rep = find(row);
        if (demand_[row] >= 1 && !(used_comps & (1u << rep)) &&
            cells_used_ + 1 + (m_ - col - 1) <= max_cells_) {
            const int limit = std::min(demand_[row], residual);
            const uint64_t bit = 1ull << (row * m_ + col);
            mask_ |= bit;
            ++cells_used_;
            for (int v = 1; v <= limit; ++v) {
                demand_[row] -= v;
                const bool keep_going =
                    place_cells(col, row + 1, residual - v, used_comps | (1u << rep));
                demand_[row] += v;
                if (!keep_going) {
                    mask_ &= ~bit;
                    --cells_used_;
                    return false;
                }
            }
            mask_ &= ~bit;
            --cells_used_;
        }
        return true;
    }

    bool close_column(int col, unsigned used_comps) {
        const int remaining = m_ - col - 1;
        if (cells_used_ + remaining > max_cells_) return true;
        if (exact_cells_ >= 0 &&
            static_cast<long long>(cells_used_) + static_cast<long long>(remaining) * n_ <
                exact_cells_) {
            return true;
        }

        int needed = 0, fractional = 0;
        for (int i = 0; i < n_; ++i) {
            needed += (demand_[i] + n_ - 1) / n_;
            if (demand_[i] % n_ != 0) ++fractional;
        }
        if (cells_used_ + std::max(remaining, needed) > max_cells_) return true;
        const int slack = max_cells_ - cells_used_ - remaining;
        if (fractional > 2 * slack) return true;

        // Merge the touched components; restore on the way out.
        std::array<int, 16> saved;
        std::copy(comp_.begin(), comp_.end(), saved.begin());
        if (used_comps != 0) {
            int target = -1;
            for (int i = 0; i < n_; ++i) {
                const int rep = find(i);
                if (used_comps & (1u << rep)) {
                    if (target == -1) target = rep;
                    comp_[i] = target;
                } else {
                    comp_[i] = rep;
                }
            }
        }
        const bool keep_going = descend_column(col + 1);
        std::copy(saved.begin(), saved.begin() + n_, comp_.begin());
        return keep_going;
    }

    int find(int row) const {
        int v = row;
        while (comp_[v] != v) v = comp_[v];
        return v;
    }

    int n_;
    int m_;
    int max_cells_;
    int exact_cells_;  // -1: any size up to max_cells_
    const std::function<bool(uint64_t, int)>& emit_;

    struct KeyHash {
        size_t operator()(const StateKey& k) const {
            return std::hash<uint64_t>()(k.first * 0x9E3779B97F4A7C15ull ^ k.second);
        }
    };

    std::vector<int> demand_;
    std::vector<int> comp_;
    std::unordered_set<StateKey, KeyHash> barren_;
    long long emitted_ = 0;
    uint64_t mask_ = 0;
    int cells_used_ = 0;
};

}  // namespace

void for_each_extremal(int n, int m,
                       const std::function<void(uint64_t mask, int size)>& emit) {
    if (n < 1 || m < 1) {
        throw std::domain_error("for_each_extremal: dimensions must be positive");
    }
    if (n + m > 14) {
        throw capacity_error("for_each_extremal: limited to n + m <= 14");
    }
    if (n > m) {
        // Enumerate the transposed polytope and map supports back.
        for_each_extremal(m, n, [&](uint64_t mask, int size) {
            uint64_t flipped = 0;
            while (mask) {
                const int bit = std::countr_zero(mask);
                mask &= mask - 1;
                flipped |= 1ull << ((bit % n) * m + bit / n);
            }
            emit(flipped, size);
        });
        return;
    }
    const std::function<bool(uint64_t, int)> keep = [&](uint64_t mask, int size) {
        emit(mask, size);
        return true;
    };
    ColumnDfs(n, m, n + m - 1, -1, keep).run();
}

namespace {

bool mask_less(uint64_t a, uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    if (a == b) return false;
    const uint64_t low = (a ^ b) & -(a ^ b);
    return (a & low) != 0;  // holder of the smallest differing cell sorts first
}

}  // namespace

ExtremalCensus enumerate_extremal(int n, int m) {
    ExtremalCensus census;
    census.n = n;
    census.m = m;
    for_each_extremal(n, m, [&](uint64_t mask, int) { census.supports.push_back(mask); });
    std::sort(census.supports.begin(), census.supports.end(), mask_less);
    return census;
}

uint64_t ExtremalCensus::mask_of(const SupportSet& S, int m) {
    uint64_t mask = 0;
    for (const Cell& c : S) {
        mask |= 1ull << (c.first * m + c.second);
    }
    return mask;
}

SupportSet ExtremalCensus::support_at(size_t index) const {
    SupportSet S;
    uint64_t mask = supports.at(index);
    while (mask) {
        const int bit = std::countr_zero(mask);
        S.emplace(bit / m, bit % m);
        mask &= mask - 1;
    }
    return S;
}

UMatrix ExtremalCensus::matrix_at(size_t index) const {
    auto solved = solve_forest(n, m, support_at(index));
    if (!solved) {
        throw std::logic_error("census: stored support has no positive solution");
    }
    return *solved;
}

bool ExtremalCensus::contains(const SupportSet& S) const {
    const uint64_t mask = mask_of(S, m);
    const auto it = std::lower_bound(supports.begin(), supports.end(), mask, mask_less);
    return it != supports.end() && *it == mask;
}

long long min_support_bruteforce(long long n, long long m, MinSupportMethod method) {
    if (n < 1 || m < 1) {
        throw std::domain_error("min_support_bruteforce: dimensions must be positive");
    }
    const bool swapped = n > m;
    if (swapped) std::swap(n, m);

    if (method == MinSupportMethod::subset) {
        if (n * m > 24) {
            throw capacity_error("min_support_bruteforce: subset method limited to n*m <= 24");
        }
        const int cells = static_cast<int>(n * m);
        std::vector<uint32_t> row_mask(n, 0), col_mask(m, 0);
        std::vector<Cell> all_cells;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < m; ++j) {
                const int bit = i * static_cast<int>(m) + j;
                row_mask[i] |= 1u << bit;
                col_mask[j] |= 1u << bit;
                all_cells.emplace_back(i, j);
            }
        }
        std::vector<Cell> chosen;
        // Any feasible support covers every row and column, so sizes below
        // max(n, m) cannot work; the constant matrix makes size n*m feasible.
        for (int s = static_cast<int>(std::max(n, m)); s <= cells; ++s) {
            uint32_t mask = (1u << s) - 1;
            const uint32_t end = cells == 32 ? 0 : (1u << cells);
            while (mask < end) {
                bool covered = true;
                for (int i = 0; covered && i < n; ++i) covered = (mask & row_mask[i]) != 0;
                for (int j = 0; covered && j < m; ++j) covered = (mask & col_mask[j]) != 0;
                if (covered) {
                    chosen.clear();
                    for (uint32_t bits = mask; bits; bits &= bits - 1) {
                        chosen.push_back(all_cells[std::countr_zero(bits)]);
                    }
                    if (feasible_cells(n, m, chosen)) return s;
                }
                // Gosper's hack: next subset of the same size.
                const uint32_t c = mask & -mask;
                const uint32_t r = mask + c;
                mask = (((r ^ mask) >> 2) / c) | r;
            }
        }
        throw std::logic_error("min_support_bruteforce: no feasible support found");
    }

    if (n + m > 16) {
        throw capacity_error("min_support_bruteforce: forest method limited to n + m <= 16");
    }
    for (int s = static_cast<int>(std::max(n, m)); s <= n + m - 1; ++s) {
        bool found = false;
        const std::function<bool(uint64_t, int)> stop_on_first = [&](uint64_t, int) {
            found = true;
            return false;
        };
        ColumnDfs(static_cast<int>(n), static_cast<int>(m), s, s, stop_on_first).run();
        if (found) return s;
    }
    throw std::logic_error("min_support_bruteforce: no acyclic support found");
}

namespace {

// Dictionary-encoded canonical form under row and column permutations: the
// lexicographically least matrix over all row orders after sorting columns.
// Backtracking over row orders; partial blocks are compared against the best
// so far, which is sound because column ties beyond the decided prefix never
// change the prefix block's content.
class Canonicalizer {
public:
    explicit Canonicalizer(std::vector<std::vector<int>> rows)
        : rows_(std::move(rows)),
          row_count_(static_cast<int>(rows_.size())),
          col_count_(static_cast<int>(rows_.front().size())) {}

    std::vector<std::vector<int>> run() {
        chosen_.clear();
        used_.assign(row_count_, 0);
        best_.clear();
        extend();
        return best_;
    }

private:
    // Columns of the chosen-row block, sorted lexicographically.
    std::vector<std::vector<int>> block() const {
        std::vector<std::vector<int>> cols(col_count_, std::vector<int>(chosen_.size()));
        for (int j = 0; j < col_count_; ++j) {
            for (size_t k = 0; k < chosen_.size(); ++k) {
                cols[j][k] = rows_[chosen_[k]][j];
            }
        }
        std::sort(cols.begin(), cols.end());
        std::vector<std::vector<int>> rows(chosen_.size(), std::vector<int>(col_count_));
        for (int j = 0; j < col_count_; ++j) {
            for (size_t k = 0; k < chosen_.size(); ++k) {
                rows[k][j] = cols[j][k];
            }
        }
        return rows;
    }

    // -1/0/+1 against the same-size prefix of best_.
    int compare_prefix(const std::vector<std::vector<int>>& prefix) const {
        for (size_t k = 0; k < prefix.size(); ++k) {
            if (prefix[k] < best_[k]) return -1;
            if (prefix[k] > best_[k]) return 1;
        }
        return 0;
    }

    void extend() {
        for (int r = 0; r < row_count_; ++r) {
            if (used_[r]) continue;
            used_[r] = 1;
            chosen_.push_back(r);
            const auto prefix = block();
            const int cmp = best_.empty() ? -1 : compare_prefix(prefix);
            if (cmp <= 0) {
                if (static_cast<int>(chosen_.size()) == row_count_) {
                    if (best_.empty() || cmp < 0) best_ = prefix;
                } else {
                    extend();
                }
            }
            chosen_.pop_back();
            used_[r] = 0;
        }
    }

    std::vector<std::vector<int>> rows_;
    int row_count_;
    int col_count_;
    std::vector<int> chosen_;
    std::vector<char> used_;
    std::vector<std::vector<int>> best_;
};

constexpr int kEquivalenceRowCap = 8;
constexpr int kEquivalenceColCap = 512;

// Encodes entries as indices into the sorted distinct values of both inputs,
// orienting so the backtracked side is the smaller one.
std::vector<std::vector<int>> encode(const UMatrix& M, const std::vector<Rational>& values) {
    const bool flip = M.rows() > M.cols();
    const int r = flip ? M.cols() : M.rows();
    const int c = flip ? M.rows() : M.cols();
    std::vector<std::vector<int>> out(r, std::vector<int>(c));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < c; ++j) {
            const Rational& e = flip ? M.at(j, i) : M.at(i, j);
            out[i][j] = static_cast<int>(
                std::lower_bound(values.begin(), values.end(), e) - values.begin());
        }
    }
    return out;
}

void check_equivalence_caps(const UMatrix& M) {
    if (std::min(M.rows(), M.cols()) > kEquivalenceRowCap ||
        std::max(M.rows(), M.cols()) > kEquivalenceColCap) {
        throw capacity_error("equivalence: limited to min(n,m) <= " +
                             std::to_string(kEquivalenceRowCap) + " and max(n,m) <= " +
                             std::to_string(kEquivalenceColCap));
    }
}

std::vector<Rational> distinct_values(const UMatrix& M) {
    std::set<Rational> values;
    for (int i = 0; i < M.rows(); ++i) {
        for (int j = 0; j < M.cols(); ++j) {
            values.insert(M.at(i, j));
        }
    }
    return {values.begin(), values.end()};
}

}  // namespace

bool are_equivalent(const UMatrix& A, const UMatrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) {
        throw std::invalid_argument("are_equivalent: dimension mismatch");
    }
    check_equivalence_caps(A);

    // Cheap necessary conditions first.
    if (entry_multiset(A) != entry_multiset(B)) return false;
    const auto sorted_lines = [](const UMatrix& M, bool by_rows) {
        std::vector<std::vector<Rational>> lines;
        const int outer = by_rows ? M.rows() : M.cols();
        const int inner = by_rows ? M.cols() : M.rows();
        for (int a = 0; a < outer; ++a) {
            std::vector<Rational> line;
            line.reserve(inner);
            for (int b = 0; b < inner; ++b) {
                line.push_back(by_rows ? M.at(a, b) : M.at(b, a));
            }
            std::sort(line.begin(), line.end());
            lines.push_back(std::move(line));
        }
        std::sort(lines.begin(), lines.end());
        return lines;
    };
    if (sorted_lines(A, true) != sorted_lines(B, true)) return false;
    if (sorted_lines(A, false) != sorted_lines(B, false)) return false;

    std::set<Rational> value_set;
    for (const UMatrix* M : {&A, &B}) {
        for (int i = 0; i < M->rows(); ++i) {
            for (int j = 0; j < M->cols(); ++j) {
                value_set.insert(M->at(i, j));
            }
        }
    }
    const std::vector<Rational> values(value_set.begin(), value_set.end());
    return Canonicalizer(encode(A, values)).run() == Canonicalizer(encode(B, values)).run();
}

std::string canonical_equivalence_key(const UMatrix& M) {
    check_equivalence_caps(M);
    const std::vector<Rational> values = distinct_values(M);
    const auto canon = Canonicalizer(encode(M, values)).run();
    std::ostringstream out;
    out << M.rows() << 'x' << M.cols() << '|';
    for (const Rational& v : values) out << v << ',';
    out << '|';
    for (const auto& row : canon) {
        for (int code : row) out << code << ',';
        out << ';';
    }
    return out.str();
}

CensusStatistics census_statistics(const ExtremalCensus& census) {
    CensusStatistics stats;
    std::set<std::string> keys;
    for (size_t k = 0; k < census.size(); ++k) {
        const int size = std::popcount(census.supports[k]);
        ++stats.size_histogram[size];
        keys.insert(canonical_equivalence_key(census.matrix_at(k)));
    }
    stats.equivalence_classes = static_cast<long long>(keys.size());
    if (!stats.size_histogram.empty()) {
        stats.min_size = stats.size_histogram.begin()->first;
        stats.max_size = stats.size_histogram.rbegin()->first;
    }
    return stats;
}

void write_census_jsonl(const ExtremalCensus& census, std::ostream& out) {
    for (size_t k = 0; k < census.size(); ++k) {
        const SupportSet S = census.support_at(k);
        out << "{\"support\":[";
        bool first = true;
        for (const Cell& c : S) {
            if (!first) out << ',';
            first = false;
            out << '[' << c.first + 1 << ',' << c.second + 1 << ']';
        }
        std::string matrix_json = to_json_text(census.matrix_at(k));
        while (!matrix_json.empty() && matrix_json.back() == '\n') matrix_json.pop_back();
        out << "],\"matrix\":" << matrix_json << ",\"size\":" << S.size() << "}\n";
    }
}

void write_histogram_csv(const CensusStatistics& stats, std::ostream& out) {
    out << "size,count\n";
    for (const auto& [size, count] : stats.size_histogram) {
        out << size << ',' << count << '\n';
    }
}

}  // namespace dsm
