#include "kradius/builder.hpp"

#include "kradius/cycles.hpp"
#include "kradius/numtheory.hpp"
#include "kradius/optimal2p.hpp"
#include "kradius/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kradius {

namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
    return (a + b - 1) / b;
}

Sequence single_pass_sequence(std::uint32_t n, std::uint32_t k) {
    Sequence s;
    s.n = n;
    s.k = k;
    s.symbols.resize(n);
    std::iota(s.symbols.begin(), s.symbols.end(), Symbol{0});
    return s;
}

/// q selection shared by the automatic dispatch and main_recursive: either
/// the largest prime below the class budget, or the largest q = 1 (mod p!)
/// below it. Returns nullopt when neither route yields a usable q > k.
std::optional<std::uint64_t> pick_q(std::uint32_t k, std::uint32_t n, QChoice qc) {
    if (qc == QChoice::Prime) return choose_q_prime(k, n);
    const std::uint32_t p = 2 * k + 1;
    if (p > 20) return std::nullopt;  // p! overflows 64 bits
    const std::uint64_t pf = factorial(p);
    const std::uint64_t x = n / p;
    if (x < pf) return std::nullopt;
    const std::uint64_t q = (x - 1) / pf * pf + 1;
    if (q <= k) return std::nullopt;  // q == 1 carries no usable alphabet
    return q;
}

Sequence build_with(Strategy strat, std::uint32_t n, std::uint32_t k,
                    QChoice qc, std::vector<PlanStep>& trace);

Sequence construct_auto(std::uint32_t n, std::uint32_t k, QChoice qc,
                        std::vector<PlanStep>& trace) {
    if (static_cast<std::uint64_t>(n) <= static_cast<std::uint64_t>(k) + 1) {
        return build_with(Strategy::SinglePass, n, k, qc, trace);
    }
    if (k >= n / 2) {
        return build_with(Strategy::TrivialLargeK, n, k, qc, trace);
    }
    if (k == 2 && n % 2 == 0) {
        const std::uint32_t p = n / 2;
        if (p % 2 == 1 && is_prime(p)) {
            return build_with(Strategy::Optimal2p, n, k, qc, trace);
        }
    }
    if (pick_q(k, n, qc)) {
        return build_with(Strategy::MainRecursive, n, k, qc, trace);
    }
    if (k >= 3) {
        return build_with(Strategy::BlockExpand, n, k, qc, trace);
    }
    // Left over: k = 1 with no usable q, and the few small k = 2 alphabets
    // that are neither large-radius nor twice a prime. A 1-radius sequence
    // is k-radius for every k >= 1.
    return build_with(Strategy::GhoshBase, n, k, qc, trace);
}

Sequence build_with(Strategy strat, std::uint32_t n, std::uint32_t k,
                    QChoice qc, std::vector<PlanStep>& trace) {
    switch (strat) {
        case Strategy::Auto:
            return construct_auto(n, k, qc, trace);

        case Strategy::SinglePass: {
            if (static_cast<std::uint64_t>(n) > static_cast<std::uint64_t>(k) + 1) {
                std::ostringstream msg;
                msg << "single_pass requires n <= k+1, got n=" << n << ", k=" << k;
                throw construction_error(msg.str());
            }
            trace.push_back(PlanStep{Strategy::SinglePass, n, k, std::nullopt});
            return single_pass_sequence(n, k);
        }

        case Strategy::TrivialLargeK: {
            if (k < n / 2 || k >= n) {
                std::ostringstream msg;
                msg << "trivial_large_k requires floor(n/2) <= k < n, got n=" << n
                    << ", k=" << k;
                throw construction_error(msg.str());
            }
            trace.push_back(PlanStep{Strategy::TrivialLargeK, n, k, std::nullopt});
            return trivial_large_k(n, k);
        }

        case Strategy::Optimal2p: {
            if (k != 2) {
                throw construction_error("optimal_2p requires k = 2, got k=" +
                                         std::to_string(k));
            }
            if (n % 2 != 0 || !is_prime(n / 2)) {
                throw construction_error(
                    "optimal_2p requires n = 2p with p prime, got n=" +
                    std::to_string(n));
            }
            trace.push_back(PlanStep{Strategy::Optimal2p, n, k, std::nullopt});
            return construct_2p(n / 2);
        }

        case Strategy::MainRecursive: {
            const auto q = pick_q(k, n, qc);
            if (!q) {
                std::ostringstream msg;
                msg << "main_recursive: no usable q for n=" << n << ", k=" << k
                    << " with " << to_string(qc) << " selection";
                throw construction_error(msg.str());
            }
            trace.push_back(PlanStep{Strategy::MainRecursive, n, k, q});
            // The 2k+1 class sequences are the same construction relabeled,
            // so build it once and shift the ids per class.
            const auto local = construct_auto(static_cast<std::uint32_t>(*q), k,
                                              qc, trace);
            std::vector<Sequence> classes(2 * static_cast<std::size_t>(k) + 1);
            for (std::size_t i = 0; i < classes.size(); ++i) {
                classes[i].n = n;
                classes[i].k = k;
                classes[i].symbols.reserve(local.symbols.size());
                const Symbol shift = static_cast<Symbol>(i * *q);
                for (Symbol s : local.symbols) {
                    classes[i].symbols.push_back(s + shift);
                }
            }
            return assemble_layer(n, k, static_cast<std::uint32_t>(*q), classes);
        }

        case Strategy::BlockExpand: {
            if (k < 3) {
                throw construction_error("block_expand requires k >= 3, got k=" +
                                         std::to_string(k));
            }
            // Largest base radius K < k whose blocks still hold >= 2 symbols.
            const std::uint32_t base_k = (k - 1) / 2;
            const std::uint32_t m = (k + 1) / (base_k + 1);
            const std::uint32_t base_n = static_cast<std::uint32_t>(ceil_div(n, m));
            trace.push_back(PlanStep{Strategy::BlockExpand, n, k, std::nullopt});
            const Sequence base = construct_auto(base_n, base_k, qc, trace);
            return block_expand(base, k, n);
        }

        case Strategy::GhoshBase: {
            trace.push_back(PlanStep{Strategy::GhoshBase, n, k, std::nullopt});
            Sequence s = ghosh_1radius(n);
            s.k = k;  // 1-radius implies k-radius for every k >= 1
            return s;
        }
    }
    throw std::logic_error("construct: unhandled strategy");
}

}  // namespace

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::Auto: return "auto";
        case Strategy::MainRecursive: return "main_recursive";
        case Strategy::Optimal2p: return "optimal_2p";
        case Strategy::BlockExpand: return "block_expand";
        case Strategy::TrivialLargeK: return "trivial_large_k";
        case Strategy::SinglePass: return "single_pass";
        case Strategy::GhoshBase: return "ghosh_base";
    }
    return "unknown";
}

std::optional<Strategy> parse_strategy(const std::string& name) {
    for (Strategy s : {Strategy::Auto, Strategy::MainRecursive, Strategy::Optimal2p,
                       Strategy::BlockExpand, Strategy::TrivialLargeK,
                       Strategy::SinglePass, Strategy::GhoshBase}) {
        if (to_string(s) == name) return s;
    }
    return std::nullopt;
}

std::string to_string(QChoice c) {
    return c == QChoice::Prime ? "prime" : "factorial";
}

std::optional<QChoice> parse_q_choice(const std::string& name) {
    if (name == "prime") return QChoice::Prime;
    if (name == "factorial") return QChoice::Factorial;
    return std::nullopt;
}

std::uint64_t choose_q_factorial(std::uint32_t p, std::uint64_t x) {
    if (p == 0) throw std::invalid_argument("choose_q_factorial: p must be positive");
    const std::uint64_t pf = factorial(p);  // throws overflow_error for p > 20
    if (x < pf) {
        std::ostringstream msg;
        msg << "choose_q_factorial: no valid q, x=" << x << " is below p!=" << pf;
        throw construction_error(msg.str());
    }
    return (x - 1) / pf * pf + 1;
}

std::optional<std::uint64_t> choose_q_prime(std::uint32_t k, std::uint64_t n) {
    if (k == 0) throw std::invalid_argument("choose_q_prime: k must be positive");
    const std::uint64_t budget = n / (2 * static_cast<std::uint64_t>(k) + 1);
    const auto p = largest_prime_at_most(budget);
    if (!p || *p <= k) return std::nullopt;
    return p;
}

Sequence trivial_large_k(std::uint32_t n, std::uint32_t k) {
    if (n == 0 || k < n / 2 || k >= n) {
        std::ostringstream msg;
        msg << "trivial_large_k requires floor(n/2) <= k < n, got n=" << n
            << ", k=" << k;
        throw std::invalid_argument(msg.str());
    }
    Sequence s;
    s.n = n;
    s.k = k;
    s.symbols.reserve(2 * static_cast<std::size_t>(n) - k - 1);
    for (Symbol v = 0; v < n; ++v) s.symbols.push_back(v);
    // Second pass 0..n-k-2: symbol b's first occurrence and symbol a's
    // second lie at distance n+a-b <= k whenever b-a > k.
    for (Symbol v = 0; v + k + 1 < n; ++v) s.symbols.push_back(v);
    return s;
}

Sequence ghosh_1radius(std::uint32_t n) {
    Sequence s;
    s.n = n;
    s.k = 1;
    if (n == 0) return s;
    if (n == 1) {
        s.symbols = {0};
        return s;
    }

    // Edge list of the complete graph; for even n a perfect matching
    // {2i, 2i+1} is doubled so every degree becomes even.
    std::vector<std::pair<Symbol, Symbol>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2 + n / 2);
    for (Symbol a = 0; a + 1 < n; ++a) {
        for (Symbol b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    }
    const bool even = n % 2 == 0;
    if (even) {
        for (Symbol i = 0; i < n / 2; ++i) edges.emplace_back(2 * i, 2 * i + 1);
    }

    std::vector<std::vector<std::pair<Symbol, std::size_t>>> adj(n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        adj[edges[e].first].emplace_back(edges[e].second, e);
        adj[edges[e].second].emplace_back(edges[e].first, e);
    }

    // Hierholzer's algorithm, iterative; neighbor order is fixed by the edge
    // enumeration above, so the walk is deterministic.
    std::vector<char> used(edges.size(), 0);
    std::vector<std::size_t> next(n, 0);
    std::vector<Symbol> stack{0};
    std::vector<Symbol> circuit;
    circuit.reserve(edges.size() + 1);
    while (!stack.empty()) {
        const Symbol u = stack.back();
        std::size_t& cursor = next[u];
        while (cursor < adj[u].size() && used[adj[u][cursor].second]) ++cursor;
        if (cursor == adj[u].size()) {
            circuit.push_back(u);
            stack.pop_back();
        } else {
            used[adj[u][cursor].second] = 1;
            stack.push_back(adj[u][cursor].first);
        }
    }

    if (!even) {
        s.symbols = std::move(circuit);  // closed walk, C(n,2)+1 vertices
        return s;
    }

    // Even n: drop the closing duplicate vertex, then rotate the cyclic walk
    // so one traversal of a doubled matching edge is the wrap-around edge;
    // leaving that edge out costs nothing because its twin stays inside.
    circuit.pop_back();
    const std::size_t len = circuit.size();
    std::size_t cut = len;  // index such that edge (cut, cut+1) is a matching edge
    for (std::size_t t = 0; t < len; ++t) {
        const Symbol a = circuit[t];
        const Symbol b = circuit[(t + 1) % len];
        if (a / 2 == b / 2 && a != b) {
            cut = t;
            break;
        }
    }
    if (cut == len) {
        throw std::logic_error("ghosh_1radius: no matching edge found in circuit");
    }
    s.symbols.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        s.symbols.push_back(circuit[(cut + 1 + i) % len]);
    }
    return s;
}

Sequence block_expand(const Sequence& base, std::uint32_t k, std::uint32_t n) {
    if (n == 0 || k == 0) {
        throw std::invalid_argument("block_expand: n and k must be positive");
    }
    const std::uint32_t base_k = base.k;
    if (base_k == 0 || base_k > k) {
        throw std::invalid_argument(
            "block_expand: base radius must satisfy 1 <= base.k <= k");
    }
    const std::uint32_t m = (k + 1) / (base_k + 1);
    const std::uint64_t expected_base_n = ceil_div(n, m);
    if (base.n != expected_base_n) {
        std::ostringstream msg;
        msg << "block_expand: base alphabet " << base.n << " does not match "
            << "ceil(n/m) = " << expected_base_n << " for n=" << n
            << ", block size m=" << m;
        throw std::invalid_argument(msg.str());
    }
    Sequence out;
    out.n = n;
    out.k = k;
    out.symbols.reserve(base.symbols.size() * m);
    for (Symbol a : base.symbols) {
        if (a >= base.n) {
            throw std::invalid_argument(
                "block_expand: base sequence contains symbol outside its alphabet");
        }
        const std::uint64_t lo = static_cast<std::uint64_t>(a) * m;
        const std::uint64_t hi = std::min<std::uint64_t>(lo + m, n);
        for (std::uint64_t v = lo; v < hi; ++v) {
            out.symbols.push_back(static_cast<Symbol>(v));
        }
    }
    return out;
}

Sequence assemble_layer(std::uint32_t n, std::uint32_t k, std::uint32_t q,
                        const std::vector<Sequence>& class_sequences) {
    if (n == 0 || k == 0 || q == 0) {
        throw std::invalid_argument("assemble_layer: n, k, q must be positive");
    }
    const std::uint64_t rows = 2 * static_cast<std::uint64_t>(k) + 1;
    if (rows * q > n) {
        std::ostringstream msg;
        msg << "assemble_layer: q(2k+1) = " << rows * q << " exceeds n = " << n;
        throw std::invalid_argument(msg.str());
    }
    if (!divisor_condition(k, q)) {
        std::ostringstream msg;
        msg << "assemble_layer: divisor condition fails for k=" << k << ", q=" << q
            << " (q has a divisor between 2 and k)";
        throw std::invalid_argument(msg.str());
    }
    if (class_sequences.size() != rows) {
        std::ostringstream msg;
        msg << "assemble_layer: expected " << rows << " class sequences, got "
            << class_sequences.size();
        throw std::invalid_argument(msg.str());
    }
    for (std::size_t i = 0; i < class_sequences.size(); ++i) {
        const std::uint64_t lo = i * static_cast<std::uint64_t>(q);
        const std::uint64_t hi = lo + q;
        Sequence local;
        local.n = q;
        local.k = k;
        local.symbols.reserve(class_sequences[i].symbols.size());
        for (Symbol s : class_sequences[i].symbols) {
            if (s < lo || s >= hi) {
                std::ostringstream msg;
                msg << "assemble_layer: class sequence " << i << " contains symbol "
                    << s << " outside its block [" << lo << ", " << hi << ")";
                throw std::invalid_argument(msg.str());
            }
            local.symbols.push_back(static_cast<Symbol>(s - lo));
        }
        if (!verify(local).is_k_radius) {
            std::ostringstream msg;
            msg << "assemble_layer: class sequence " << i
                << " is not k-radius over its block";
            throw std::invalid_argument(msg.str());
        }
    }

    CycleSystem grid(k, q);
    const std::uint64_t leftovers = n - rows * q;
    std::uint64_t expected = 2 * static_cast<std::uint64_t>(n) * leftovers +
                             grid.sequence_length();
    for (const Sequence& cs : class_sequences) expected += cs.symbols.size();

    Sequence out;
    out.n = n;
    out.k = k;
    out.symbols.reserve(static_cast<std::size_t>(expected));
    for (const Sequence& cs : class_sequences) {
        out.symbols.insert(out.symbols.end(), cs.symbols.begin(), cs.symbols.end());
    }
    for (std::uint64_t b = rows * q; b < n; ++b) {
        for (std::uint64_t a = 0; a < n; ++a) {
            out.symbols.push_back(static_cast<Symbol>(a));
            out.symbols.push_back(static_cast<Symbol>(b));
        }
    }
    const Sequence cover = grid.sequence();
    out.symbols.insert(out.symbols.end(), cover.symbols.begin(), cover.symbols.end());

    if (out.symbols.size() != expected) {
        throw std::logic_error("assemble_layer: length bookkeeping failed");
    }
    return out;
}

BuildResult construct(std::uint32_t n, std::uint32_t k, Strategy strategy,
                      QChoice q_choice) {
    if (k == 0) throw std::invalid_argument("construct: k must be positive");
    BuildResult result;
    result.plan.n = n;
    result.plan.k = k;
    result.plan.requested = strategy;
    result.plan.q_choice = q_choice;
    if (n == 0) {
        result.sequence = Sequence{0, k, {}};
        return result;
    }
    result.sequence = build_with(strategy, n, k, q_choice, result.plan.trace);
    if (n <= 10'000) {
        const CoverageReport report = verify(result.sequence);
        if (!report.is_k_radius) {
            std::ostringstream msg;
            msg << "construct: output is not " << k << "-radius over " << n
                << " symbols (covered " << report.covered_pairs << "/"
                << report.total_pairs << " pairs)";
            throw std::logic_error(msg.str());
        }
    }
    return result;
}

}  // namespace kradius
