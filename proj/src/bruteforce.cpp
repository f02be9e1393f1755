#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "codebounds/aq_oracle.hpp"
#include "codebounds/combinatorics.hpp"

namespace codebounds {

namespace {

// Hamming distance of two words encoded as base-q integers.
unsigned word_distance(std::uint64_t a, std::uint64_t b, unsigned q) {
    unsigned dist = 0;
    while (a != b) {
        dist += (a % q) != (b % q);
        a /= q;
        b /= q;
    }
    return dist;
}

unsigned word_weight(std::uint64_t a, unsigned q) {
    unsigned w = 0;
    while (a != 0) {
        w += (a % q) != 0;
        a /= q;
    }
    return w;
}

// Max-clique branch and bound: static vertex order, greedy colouring upper
// bound by class peeling, candidates expanded in descending colour order.
// Vertex sets are bitsets over the static order.
class CliqueSolver {
  public:
    explicit CliqueSolver(std::size_t n) : n_(n), words_((n + 63) / 64) {
        adj_.assign(n_ * words_, 0);
    }

    void add_edge(std::size_t a, std::size_t b) {
        adj_[a * words_ + b / 64] |= 1ull << (b % 64);
        adj_[b * words_ + a / 64] |= 1ull << (a % 64);
    }

    std::size_t solve(std::size_t initial_best) {
        if (n_ == 0) return 0;
        best_ = initial_best;
        std::size_t depth_cap = n_ + 2;
        frames_.assign(depth_cap, Frame{});
        for (auto& f : frames_) {
            f.candidates.assign(words_, 0);
            f.live.assign(words_, 0);
            f.uncolored.assign(words_, 0);
            f.cls.assign(words_, 0);
            f.order.reserve(n_);
            f.color.reserve(n_);
        }
        for (std::size_t v = 0; v < n_; ++v) frames_[0].candidates[v / 64] |= 1ull << (v % 64);
        expand(0, 0);
        return best_;
    }

  private:
    struct Frame {
        std::vector<std::uint64_t> candidates, live, uncolored, cls;
        std::vector<std::uint32_t> order, color;
    };

    const std::uint64_t* row(std::size_t v) const { return adj_.data() + v * words_; }

    bool is_empty(const std::vector<std::uint64_t>& s) const {
        for (auto w : s)
            if (w) return false;
        return true;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    // Greedy colouring by class peeling: repeatedly strip a maximal set of
    // pairwise non-adjacent candidates; vertices are emitted class by class
    // so colours are nondecreasing along the branch order.
    void color_frame(Frame& f) {
        f.order.clear();
        f.color.clear();
        f.uncolored = f.candidates;
        std::uint32_t color = 0;
        while (true) {
            std::size_t w0 = words_;
            for (std::size_t w = 0; w < words_; ++w)
                if (f.uncolored[w]) {
                    w0 = w;
                    break;
                }
            if (w0 == words_) break;
            ++color;
            f.cls = f.uncolored;
            for (std::size_t w = 0; w < w0; ++w) f.cls[w] = 0;
            while (true) {
                std::size_t v = npos;
                for (std::size_t w = w0; w < words_; ++w)
                    if (f.cls[w]) {
                        v = w * 64 + static_cast<std::size_t>(__builtin_ctzll(f.cls[w]));
                        w0 = w;
                        break;
                    }
                if (v == npos) break;
                f.order.push_back(static_cast<std::uint32_t>(v));
                f.color.push_back(color);
                f.uncolored[v / 64] &= ~(1ull << (v % 64));
                f.cls[v / 64] &= ~(1ull << (v % 64));
                const std::uint64_t* rv = row(v);
                for (std::size_t w = 0; w < words_; ++w) f.cls[w] &= ~rv[w];
            }
        }
    }

    void expand(std::size_t depth, std::size_t rsize) {
        Frame& f = frames_[depth];
        if (is_empty(f.candidates)) {
            if (rsize > best_) best_ = rsize;
            return;
        }
        color_frame(f);
        f.live = f.candidates;
        Frame& child = frames_[depth + 1];
        for (std::size_t i = f.order.size(); i-- > 0;) {
            if (rsize + f.color[i] <= best_) return;
            std::size_t v = f.order[i];
            f.live[v / 64] &= ~(1ull << (v % 64));
            const std::uint64_t* rv = row(v);
            for (std::size_t w = 0; w < words_; ++w) child.candidates[w] = f.live[w] & rv[w];
            expand(depth + 1, rsize + 1);
        }
    }

    std::size_t n_, words_;
    std::vector<std::uint64_t> adj_;
    std::vector<Frame> frames_;
    std::size_t best_ = 0;
};

// Repeated randomised greedy packings; a strong incumbent up front keeps the
// branch and bound tree shallow.
std::size_t greedy_clique_seed(const std::vector<std::uint64_t>& words, unsigned q, unsigned d,
                               unsigned rounds) {
    std::size_t best = 0;
    std::mt19937 rng(0x5eedu);
    std::vector<std::uint32_t> perm(words.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<std::uint32_t>(i);
    std::vector<std::uint32_t> clique;
    for (unsigned round = 0; round < rounds; ++round) {
        std::shuffle(perm.begin(), perm.end(), rng);
        clique.clear();
        for (auto idx : perm) {
            bool ok = true;
            for (auto c : clique)
                if (word_distance(words[idx], words[c], q) < d) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(idx);
        }
        best = std::max(best, clique.size());
    }
    return best;
}

std::size_t max_clique_words(const std::vector<std::uint64_t>& words, unsigned q, unsigned d,
                             std::size_t seed_best) {
    std::size_t m = words.size();
    if (m == 0) return 0;
    std::vector<std::uint32_t> degree(m, 0);
    std::vector<std::vector<bool>> edge(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (word_distance(words[i], words[j], q) >= d) {
                edge[i][j] = edge[j][i] = true;
                ++degree[i];
                ++degree[j];
            }
    std::vector<std::uint32_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = static_cast<std::uint32_t>(i);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (degree[a] != degree[b]) return degree[a] > degree[b];
        return words[a] < words[b];
    });
    CliqueSolver solver(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (edge[order[i]][order[j]]) solver.add_edge(i, j);
    // a seed below the true optimum is only a hint; the search still proves it
    return solver.solve(seed_best > 0 ? seed_best - 1 : 0);
}

// Binary instances additionally pin the second and third codeword up to
// coordinate permutations: the second word can be taken as 1..10..0 per
// weight class, and the third word as a prefix pattern of the two cells the
// second word induces (permutations inside a cell fix both earlier words).
// The remaining words are searched exactly; only the top of the tree is
// collapsed.
Nat bruteforce_binary(unsigned n, unsigned d) {
    std::uint32_t total = 1u << n;
    std::vector<std::uint64_t> candidates;
    for (std::uint64_t w = 0; w < total; ++w)
        if (word_weight(w, 2) >= d) candidates.push_back(w);
    if (candidates.empty()) return Nat(1ul);

    std::size_t best = 1 + greedy_clique_seed(candidates, 2, d, 2000);

    auto dist_ok = [&](std::uint64_t a, std::uint64_t b) { return word_distance(a, b, 2) >= d; };
    for (unsigned w = d; w <= n; ++w) {
        std::uint64_t second = (w == 64 ? ~0ull : (1ull << w) - 1);
        // third word: a ones inside the support of `second`, b ones outside
        for (unsigned a = 0; a <= w; ++a) {
            for (unsigned b = 0; b <= n - w; ++b) {
                if (a + b == 0) continue;
                std::uint64_t third = ((1ull << a) - 1) | (((1ull << b) - 1) << w);
                if (third == second) continue;
                if (word_weight(third, 2) < d || !dist_ok(third, second)) continue;
                std::vector<std::uint64_t> live;
                for (std::uint64_t c : candidates)
                    if (c != second && c != third && dist_ok(c, second) && dist_ok(c, third))
                        live.push_back(c);
                std::size_t base = 3;  // zero word + the two pinned words
                if (base + live.size() > best)
                    best = std::max(best,
                                    base + max_clique_words(live, 2, d,
                                                            best > base ? best - base : 0));
            }
        }
        // codes with exactly two words also exist in this weight class
        best = std::max<std::size_t>(best, 2);
    }
    return Nat(best);
}

Nat bruteforce_general(unsigned q, unsigned n, unsigned d) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n; ++i) total *= q;
    std::vector<std::uint64_t> candidates;
    for (std::uint64_t w = 0; w < total; ++w)
        if (word_weight(w, q) >= d) candidates.push_back(w);
    if (candidates.empty()) return Nat(1ul);
    if (candidates.size() > 40000)
        throw std::invalid_argument(
            "aq_exact_bruteforce: candidate set too large for the adjacency matrix "
            "(would need > 200MB); reduce n");
    std::size_t seed = greedy_clique_seed(candidates, q, d, 2000);
    return Nat(1 + max_clique_words(candidates, q, d, seed));
}

}  // namespace

Nat aq_exact_bruteforce(const CodeParams& p) {
    // guard: q^n <= 2^20
    if (pow_u(p.q, p.n) > Nat(1ul << 20))
        throw std::invalid_argument("aq_exact_bruteforce: q^n exceeds the 2^20 search guard");
    // Some maximal code contains the zero word (translation invariance), so
    // the search fixes it and looks for a max clique among words of weight
    // >= d under the distance->=d adjacency.
    if (p.q == 2) return bruteforce_binary(p.n, p.d);
    return bruteforce_general(p.q, p.n, p.d);
}

namespace {

// Backtracking feasibility of an (n,k,q) systematic code with distance >= d:
// assign a redundancy word to each message in lexicographic order, pruning any
// assignment that violates the distance requirement against earlier messages.
class SystematicSearch {
  public:
    SystematicSearch(unsigned q, unsigned k, unsigned m, unsigned d)
        : q_(q), k_(k), m_(m), d_(d) {
        msg_count_ = 1;
        for (unsigned i = 0; i < k; ++i) msg_count_ *= q;
        red_count_ = 1;
        for (unsigned i = 0; i < m; ++i) red_count_ *= q;
        assigned_.resize(msg_count_);
    }

    bool feasible() {
        assigned_[0] = 0;  // translation fixes the redundancy of message 0
        return place(1);
    }

  private:
    bool place(std::uint64_t i) {
        if (i == msg_count_) return true;
        for (std::uint64_t red = 0; red < red_count_; ++red) {
            bool ok = true;
            for (std::uint64_t j = 0; j < i; ++j) {
                unsigned dist = word_distance(i, j, q_) + word_distance(red, assigned_[j], q_);
                if (dist < d_) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                assigned_[i] = red;
                if (place(i + 1)) return true;
            }
        }
        return false;
    }

    unsigned q_, k_, m_, d_;
    std::uint64_t msg_count_, red_count_;
    std::vector<std::uint64_t> assigned_;
};

}  // namespace

unsigned max_systematic_k_bruteforce(const CodeParams& p) {
    if (pow_u(p.q, p.n) > Nat(1ul << 16))
        throw std::invalid_argument(
            "max_systematic_k_bruteforce: q^n exceeds the 2^16 search guard");
    if (p.d == 1) return p.n;  // the identity embedding of the whole space
    unsigned best = 1;  // repetition code: k = 1 works whenever d <= n
    for (unsigned k = 2; k <= p.n - p.d + 1; ++k) {
        SystematicSearch search(p.q, k, p.n - k, p.d);
        if (!search.feasible()) break;
        best = k;
    }
    return best;
}

}  // namespace codebounds
