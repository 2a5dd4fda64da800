#include "happycol/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "happycol/errors.hpp"
#include "happycol/happiness.hpp"
#include "happycol/rng.hpp"

namespace happycol {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point start = Clock::now();
    std::int64_t limit_ms = 0;

    bool expired() const {
        if (limit_ms <= 0) return false;
        return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count() >= limit_ms;
    }
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    }
};

void check_inputs(const Graph& graph, const PartialColouring& partial, const Fraction& rho) {
    if (graph.vertex_count() != partial.size()) throw ContractViolation("colouring length does not match graph");
    if (Fraction::of(1, 1) < rho) throw ParameterError("rho must lie in [0, 1]");
}

std::vector<Vertex> uncoloured_vertices(const std::vector<Colour>& labels) {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < labels.size(); ++v)
        if (labels[v] == 0) out.push_back(static_cast<Vertex>(v));
    return out;
}

/// rho-happy count of a label vector; counts one tally per vertex scanned.
std::int64_t count_happy(const Graph& graph, const std::vector<Colour>& labels, const Fraction& rho,
                         std::uint64_t& work) {
    const auto n = graph.vertex_count();
    std::int64_t count = 0;
    for (Vertex v = 0; v < n; ++v) {
        const Colour c = labels[static_cast<std::size_t>(v)];
        if (c == 0) continue;
        std::int64_t same = 0;
        for (Vertex u : graph.neighbours(v)) same += labels[static_cast<std::size_t>(u)] == c;
        work += static_cast<std::uint64_t>(graph.degree(v));
        count += same >= rho.ceil_mul(graph.degree(v));
    }
    return count;
}

SolveResult finish(const Graph& graph, std::vector<Colour> labels, Colour k, const Fraction& rho,
                   const Deadline& deadline, bool timed_out, std::uint64_t work) {
    SolveResult result;
    result.colouring = PartialColouring::from_labels(std::move(labels), k);
    result.happy_count = happy_count(graph, result.colouring, rho);
    result.elapsed_ms = deadline.elapsed_ms();
    result.timed_out = timed_out;
    result.work_counter = work;
    return result;
}

/// Scratch for per-neighbourhood colour counts, reset via the touched list.
struct ColourTally {
    std::vector<std::int64_t> count;
    std::vector<Colour> touched;

    explicit ColourTally(Colour k) : count(static_cast<std::size_t>(k) + 1, 0) {}

    void add(Colour c) {
        if (count[static_cast<std::size_t>(c)]++ == 0) touched.push_back(c);
    }
    std::int64_t get(Colour c) const { return count[static_cast<std::size_t>(c)]; }

    /// Most frequent touched colour; ties go to the lowest index. 0 if none.
    Colour argmax() const {
        Colour best = 0;
        std::int64_t best_count = 0;
        for (Colour c : touched) {
            const auto cnt = count[static_cast<std::size_t>(c)];
            if (cnt > best_count || (cnt == best_count && best != 0 && c < best)) {
                best = c;
                best_count = cnt;
            }
        }
        return best;
    }
    void reset() {
        for (Colour c : touched) count[static_cast<std::size_t>(c)] = 0;
        touched.clear();
    }
};

} // namespace

std::vector<VertexClass> classify_vertices(const Graph& graph, const PartialColouring& partial,
                                           const Fraction& rho) {
    check_inputs(graph, partial, rho);
    const auto n = graph.vertex_count();
    const auto& labels = partial.labels();
    std::vector<VertexClass> cls(static_cast<std::size_t>(n));
    ColourTally tally(partial.k());

    // Coloured vertices first; the fringe classes depend on them.
    for (Vertex v = 0; v < n; ++v) {
        const Colour c = labels[static_cast<std::size_t>(v)];
        if (c == 0) continue;
        std::int64_t same = 0;
        std::int64_t unc = 0;
        for (Vertex u : graph.neighbours(v)) {
            const Colour cu = labels[static_cast<std::size_t>(u)];
            same += cu == c;
            unc += cu == 0;
        }
        const auto need = rho.ceil_mul(graph.degree(v));
        cls[static_cast<std::size_t>(v)] =
            same >= need ? VertexClass::Happy
                         : (same + unc >= need ? VertexClass::Potential : VertexClass::Doomed);
    }
    for (Vertex v = 0; v < n; ++v) {
        if (labels[static_cast<std::size_t>(v)] != 0) continue;
        bool near_potential = false;
        bool near_coloured = false;
        std::int64_t unc = 0;
        tally.reset();
        for (Vertex u : graph.neighbours(v)) {
            const Colour cu = labels[static_cast<std::size_t>(u)];
            if (cu == 0) {
                ++unc;
            } else {
                near_coloured = true;
                near_potential |= cls[static_cast<std::size_t>(u)] == VertexClass::Potential;
                tally.add(cu);
            }
        }
        if (near_potential) {
            cls[static_cast<std::size_t>(v)] = VertexClass::FringePotential;
        } else if (!near_coloured) {
            cls[static_cast<std::size_t>(v)] = VertexClass::Isolated;
        } else {
            const Colour best = tally.argmax();
            const std::int64_t best_count = best == 0 ? 0 : tally.get(best);
            cls[static_cast<std::size_t>(v)] = unc + best_count >= rho.ceil_mul(graph.degree(v))
                                                   ? VertexClass::FringeViable
                                                   : VertexClass::FringeDoomed;
        }
    }
    return cls;
}

SolveResult greedy_soft_mhv(const Graph& graph, const PartialColouring& partial, const SolverConfig& config) {
    check_inputs(graph, partial, config.rho);
    Deadline deadline{Clock::now(), config.time_limit_ms};
    std::uint64_t work = 0;

    std::vector<Colour> labels = partial.labels();
    const auto uncoloured = uncoloured_vertices(labels);
    if (uncoloured.empty()) return finish(graph, std::move(labels), partial.k(), config.rho, deadline, false, work);

    Colour best_colour = 1;
    std::int64_t best_happy = -1;
    for (Colour i = 1; i <= partial.k(); ++i) {
        if (deadline.expired())
            return finish(graph, partial.labels(), partial.k(), config.rho, deadline, true, work);
        for (Vertex v : uncoloured) labels[static_cast<std::size_t>(v)] = i;
        const auto h = count_happy(graph, labels, config.rho, work);
        if (h > best_happy) {
            best_happy = h;
            best_colour = i;
        }
    }
    for (Vertex v : uncoloured) labels[static_cast<std::size_t>(v)] = best_colour;
    return finish(graph, std::move(labels), partial.k(), config.rho, deadline, false, work);
}

SolveResult ngc(const Graph& graph, const PartialColouring& partial, const SolverConfig& config) {
    check_inputs(graph, partial, config.rho);
    Deadline deadline{Clock::now(), config.time_limit_ms};
    std::uint64_t work = 0;
    const Colour k = partial.k();

    std::vector<Colour> labels = partial.labels();
    std::vector<Vertex> uncoloured = uncoloured_vertices(labels);

    // Best completion colour over the given candidate set, lowest on ties.
    const auto argmax_colour = [&](const std::vector<Colour>& candidates) {
        Colour best_colour = candidates.front();
        std::int64_t best_happy = -1;
        for (Colour i : candidates) {
            for (Vertex v : uncoloured) labels[static_cast<std::size_t>(v)] = i;
            const auto h = count_happy(graph, labels, config.rho, work);
            for (Vertex v : uncoloured) labels[static_cast<std::size_t>(v)] = 0;
            if (h > best_happy) {
                best_happy = h;
                best_colour = i;
            }
        }
        return best_colour;
    };
    const auto frontier_of = [&](Colour i) {
        std::vector<Vertex> temp;
        for (Vertex v : uncoloured) {
            const auto nb = graph.neighbours(v);
            if (std::any_of(nb.begin(), nb.end(),
                            [&](Vertex u) { return labels[static_cast<std::size_t>(u)] == i; }))
                temp.push_back(v);
        }
        return temp;
    };

    std::vector<Colour> all_colours(static_cast<std::size_t>(k));
    for (Colour i = 1; i <= k; ++i) all_colours[static_cast<std::size_t>(i - 1)] = i;

    while (!uncoloured.empty()) {
        if (deadline.expired()) return finish(graph, std::move(labels), k, config.rho, deadline, true, work);

        Colour winner = argmax_colour(all_colours);
        std::vector<Vertex> temp = frontier_of(winner);
        if (temp.empty()) {
            // No uncoloured neighbour of the winning class. Restrict the
            // contest to colours that can actually reach an uncoloured vertex.
            std::vector<Colour> reachable;
            for (Colour i = 1; i <= k; ++i)
                if (!frontier_of(i).empty()) reachable.push_back(i);
            if (reachable.empty()) {
                // Disconnected remainder: settle everything with the winner.
                for (Vertex v : uncoloured) labels[static_cast<std::size_t>(v)] = winner;
                uncoloured.clear();
                break;
            }
            winner = argmax_colour(reachable);
            temp = frontier_of(winner);
        }
        for (Vertex v : temp) labels[static_cast<std::size_t>(v)] = winner;
        std::erase_if(uncoloured, [&](Vertex v) { return labels[static_cast<std::size_t>(v)] != 0; });
    }
    return finish(graph, std::move(labels), k, config.rho, deadline, false, work);
}

SolveResult lmc(const Graph& graph, const PartialColouring& partial, const SolverConfig& config) {
    check_inputs(graph, partial, config.rho);
    Deadline deadline{Clock::now(), config.time_limit_ms};
    std::uint64_t work = 0;
    const auto n = graph.vertex_count();
    const Colour k = partial.k();
    SplitMix64 rng(config.seed);

    std::vector<Colour> labels = partial.labels();
    std::int64_t uncoloured_left = 0;
    std::vector<std::int64_t> global_count(static_cast<std::size_t>(k) + 1, 0);
    for (Colour c : labels) {
        if (c == 0)
            ++uncoloured_left;
        else
            ++global_count[static_cast<std::size_t>(c)];
    }

    // Frontier = uncoloured vertices adjacent to colour. Entries are pushed
    // once and dropped lazily once their vertex is coloured.
    std::vector<Vertex> frontier;
    std::vector<bool> in_frontier(static_cast<std::size_t>(n), false);
    for (Vertex v = 0; v < n; ++v) {
        if (labels[static_cast<std::size_t>(v)] != 0) continue;
        const auto nb = graph.neighbours(v);
        if (std::any_of(nb.begin(), nb.end(),
                        [&](Vertex u) { return labels[static_cast<std::size_t>(u)] != 0; })) {
            frontier.push_back(v);
            in_frontier[static_cast<std::size_t>(v)] = true;
        }
    }

    const auto pick_frontier = [&]() -> Vertex {
        if (config.deterministic) {
            Vertex best = -1;
            std::size_t keep = 0;
            for (Vertex v : frontier) {
                if (labels[static_cast<std::size_t>(v)] != 0) continue; // stale
                frontier[keep++] = v;
                if (best < 0 || v < best) best = v;
            }
            frontier.resize(keep);
            return best;
        }
        while (!frontier.empty()) {
            const auto idx = static_cast<std::size_t>(rng.next_below(frontier.size()));
            const Vertex v = frontier[idx];
            if (labels[static_cast<std::size_t>(v)] == 0) return v;
            frontier[idx] = frontier.back(); // drop stale entry
            frontier.pop_back();
        }
        return -1;
    };
    const auto pick_detached = [&]() -> Vertex {
        std::vector<Vertex> pool = uncoloured_vertices(labels);
        if (config.deterministic) return pool.front();
        return pool[static_cast<std::size_t>(rng.next_below(pool.size()))];
    };
    const auto global_argmax = [&]() -> Colour {
        Colour best = 1;
        for (Colour c = 2; c <= k; ++c)
            if (global_count[static_cast<std::size_t>(c)] > global_count[static_cast<std::size_t>(best)]) best = c;
        return best;
    };

    ColourTally tally(k);
    while (uncoloured_left > 0) {
        if (deadline.expired()) return finish(graph, std::move(labels), k, config.rho, deadline, true, work);

        Vertex v = pick_frontier();
        Colour chosen;
        if (v < 0) {
            // Disconnected remainder (or nothing precoloured at all).
            v = pick_detached();
            chosen = global_argmax();
        } else {
            tally.reset();
            for (Vertex u : graph.neighbours(v)) {
                const Colour cu = labels[static_cast<std::size_t>(u)];
                if (cu != 0) tally.add(cu);
            }
            work += static_cast<std::uint64_t>(graph.degree(v));
            chosen = tally.argmax();
            if (chosen == 0) chosen = global_argmax();
        }

        labels[static_cast<std::size_t>(v)] = chosen;
        ++global_count[static_cast<std::size_t>(chosen)];
        --uncoloured_left;
        work += 1; // frontier bookkeeping for this vertex
        for (Vertex u : graph.neighbours(v)) {
            if (labels[static_cast<std::size_t>(u)] == 0 && !in_frontier[static_cast<std::size_t>(u)]) {
                in_frontier[static_cast<std::size_t>(u)] = true;
                frontier.push_back(u);
            }
        }
    }
    return finish(graph, std::move(labels), k, config.rho, deadline, false, work);
}

SolveResult growth_soft_mhv(const Graph& graph, const PartialColouring& partial, const SolverConfig& config) {
    check_inputs(graph, partial, config.rho);
    Deadline deadline{Clock::now(), config.time_limit_ms};
    std::uint64_t work = 0;
    const auto n = graph.vertex_count();
    const Colour k = partial.k();
    SplitMix64 rng(config.seed);

    std::vector<Colour> labels = partial.labels();
    std::vector<std::int64_t> same(static_cast<std::size_t>(n), 0);
    std::vector<VertexClass> cls;
    std::vector<Vertex> potential, fringe_viable, fringe_doomed, isolated;

    const auto recompute = [&]() {
        auto working = PartialColouring::from_labels(labels, k);
        cls = classify_vertices(graph, working, config.rho);
        for (Vertex v = 0; v < n; ++v) {
            const Colour c = labels[static_cast<std::size_t>(v)];
            if (c == 0) continue;
            std::int64_t s = 0;
            for (Vertex u : graph.neighbours(v)) s += labels[static_cast<std::size_t>(u)] == c;
            same[static_cast<std::size_t>(v)] = s;
        }
        work += static_cast<std::uint64_t>(2 * graph.edge_count());
        potential.clear();
        fringe_viable.clear();
        fringe_doomed.clear();
        isolated.clear();
        for (Vertex v = 0; v < n; ++v) {
            switch (cls[static_cast<std::size_t>(v)]) {
            case VertexClass::Potential: potential.push_back(v); break;
            case VertexClass::FringeViable: fringe_viable.push_back(v); break;
            case VertexClass::FringeDoomed: fringe_doomed.push_back(v); break;
            case VertexClass::Isolated: isolated.push_back(v); break;
            default: break;
            }
        }
    };
    const auto pick = [&](const std::vector<Vertex>& pool) {
        if (config.deterministic) return pool.front(); // pools are in ascending id order
        return pool[static_cast<std::size_t>(rng.next_below(pool.size()))];
    };
    // Colours `want` uncoloured neighbours of v (all of them if fewer exist).
    const auto colour_neighbours = [&](Vertex v, Colour c, std::int64_t want) {
        if (want <= 0) return;
        std::vector<Vertex> pool;
        for (Vertex u : graph.neighbours(v))
            if (labels[static_cast<std::size_t>(u)] == 0) pool.push_back(u);
        const auto take = std::min<std::int64_t>(want, static_cast<std::int64_t>(pool.size()));
        if (!config.deterministic) {
            for (std::int64_t i = 0; i < take; ++i) {
                const auto j = i + static_cast<std::int64_t>(
                                       rng.next_below(static_cast<std::uint64_t>(pool.size()) - i));
                std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
            }
        }
        for (std::int64_t i = 0; i < take; ++i) labels[static_cast<std::size_t>(pool[i])] = c;
    };

    ColourTally tally(k);
    recompute();
    for (;;) {
        if (deadline.expired()) return finish(graph, std::move(labels), k, config.rho, deadline, true, work);

        if (!potential.empty()) {
            const Vertex v = pick(potential);
            const auto need = config.rho.ceil_mul(graph.degree(v)) - same[static_cast<std::size_t>(v)];
            colour_neighbours(v, labels[static_cast<std::size_t>(v)], need);
        } else if (!fringe_viable.empty() || !fringe_doomed.empty() || !isolated.empty()) {
            const auto& pool =
                !fringe_viable.empty() ? fringe_viable : (!fringe_doomed.empty() ? fringe_doomed : isolated);
            const Vertex v = pick(pool);
            tally.reset();
            for (Vertex u : graph.neighbours(v)) {
                const Colour cu = labels[static_cast<std::size_t>(u)];
                if (cu != 0) tally.add(cu);
            }
            work += static_cast<std::uint64_t>(graph.degree(v));
            Colour chosen = tally.argmax();
            if (chosen == 0) chosen = 1; // no coloured neighbour: all counts tie at zero
            const auto have = tally.get(chosen);
            labels[static_cast<std::size_t>(v)] = chosen;
            colour_neighbours(v, chosen, config.rho.ceil_mul(graph.degree(v)) - have);
        } else {
            break; // complete
        }
        recompute();
    }
    return finish(graph, std::move(labels), k, config.rho, deadline, false, work);
}

OracleResult exact_oracle(const Graph& graph, const PartialColouring& partial, const Fraction& rho) {
    check_inputs(graph, partial, rho);
    constexpr std::int64_t kMaxCompletions = 10'000'000;
    const Colour k = partial.k();

    std::vector<Colour> labels = partial.labels();
    const auto uncoloured = uncoloured_vertices(labels);

    std::int64_t completions = 1;
    for (std::size_t i = 0; i < uncoloured.size(); ++i) {
        if (completions > kMaxCompletions / k)
            throw OracleRefusal("exhaustive search would visit more than " +
                                std::to_string(kMaxCompletions) + " completions");
        completions *= k;
    }

    std::uint64_t work = 0;
    for (Vertex v : uncoloured) labels[static_cast<std::size_t>(v)] = 1;

    OracleResult best;
    best.max_happy = -1;
    for (;;) {
        const auto h = count_happy(graph, labels, rho, work);
        if (h > best.max_happy) { // strict: the first maximiser is lexicographically smallest
            best.max_happy = h;
            best.colouring = PartialColouring::from_labels(labels, k);
        }
        // Odometer over the uncoloured positions, last position fastest.
        std::size_t pos = uncoloured.size();
        while (pos > 0) {
            auto& cell = labels[static_cast<std::size_t>(uncoloured[pos - 1])];
            if (cell < k) {
                ++cell;
                break;
            }
            cell = 1;
            --pos;
        }
        if (pos == 0) break;
    }
    return best;
}

} // namespace happycol
