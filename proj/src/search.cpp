#include "scx/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "scx/canonical.hpp"
#include "scx/detectors.hpp"

namespace scx {
namespace {

constexpr std::size_t kExhaustiveCandidateCap = 20;
constexpr std::size_t kBacktrackingCandidateCap = 64;

std::vector<std::vector<int>> candidate_facets(int n, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto recurse = [&](auto&& self, int next) -> void {
        if (static_cast<int>(current.size()) == r + 1) {
            out.push_back(current);
            return;
        }
        int needed = r + 1 - static_cast<int>(current.size());
        for (int v = next; v + needed - 1 <= n; ++v) {
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 1);
    // Branching follows colexicographic order: compare from the largest
    // vertex down.
    std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
}

// One exact-count constraint: if the owner facet is included, exactly r of
// the r+1 slot facets must be included too.
struct Pair {
    int owner = 0;
    std::vector<int> slots;
    std::uint64_t slot_mask = 0;
};

struct Problem {
    int n = 0;
    int r = 0;
    std::vector<std::vector<int>> facets;
    std::vector<Pair> pairs;
    std::vector<std::vector<int>> owner_pairs; // facet -> pairs it owns
    std::vector<std::vector<int>> slot_pairs;  // facet -> pairs listing it as a slot
};

Problem build_problem(int n, int r) {
    Problem p;
    p.n = n;
    p.r = r;
    p.facets = candidate_facets(n, r);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < p.facets.size(); ++i) {
        index[p.facets[i]] = static_cast<int>(i);
    }
    p.owner_pairs.resize(p.facets.size());
    p.slot_pairs.resize(p.facets.size());
    for (std::size_t i = 0; i < p.facets.size(); ++i) {
        const auto& f = p.facets[i];
        for (int u = 1; u <= n; ++u) {
            if (std::find(f.begin(), f.end(), u) != f.end()) {
                continue;
            }
            Pair pair;
            pair.owner = static_cast<int>(i);
            for (std::size_t skip = 0; skip < f.size(); ++skip) {
                std::vector<int> g;
                g.reserve(f.size());
                for (std::size_t j = 0; j < f.size(); ++j) {
                    if (j != skip) {
                        g.push_back(f[j]);
                    }
                }
                g.insert(std::upper_bound(g.begin(), g.end(), u), u);
                pair.slots.push_back(index.at(g));
            }
            for (int s : pair.slots) {
                pair.slot_mask |= std::uint64_t{1} << s;
            }
            int pair_id = static_cast<int>(p.pairs.size());
            p.owner_pairs[i].push_back(pair_id);
            for (int s : pair.slots) {
                p.slot_pairs[static_cast<std::size_t>(s)].push_back(pair_id);
            }
            p.pairs.push_back(std::move(pair));
        }
    }
    return p;
}

bool mask_satisfies(const Problem& p, std::uint64_t mask) {
    for (std::size_t i = 0; i < p.facets.size(); ++i) {
        if (!(mask & (std::uint64_t{1} << i))) {
            continue;
        }
        for (int q : p.owner_pairs[i]) {
            if (std::popcount(mask & p.pairs[static_cast<std::size_t>(q)].slot_mask) != p.r) {
                return false;
            }
        }
    }
    return true;
}

enum class Status : unsigned char { undecided, in, out };

// Depth-first include/exclude search with forward propagation of the
// exact-count constraints. A trail of assignments supports backtracking.
class Backtracker {
  public:
    Backtracker(const Problem& p, std::chrono::steady_clock::time_point deadline)
        : p_(p), deadline_(deadline), status_(p.facets.size(), Status::undecided),
          included_(p.pairs.size(), 0), excluded_(p.pairs.size(), 0) {}

    void run() {
        dfs();
    }

    const std::vector<std::uint64_t>& solutions() const { return solutions_; }
    long long nodes() const { return nodes_; }
    bool timed_out() const { return timed_out_; }

  private:
    bool assign(int facet, Status value) {
        queue_.clear();
        queue_.emplace_back(facet, value);
        std::size_t head = 0;
        while (head < queue_.size()) {
            auto [j, val] = queue_[head++];
            if (status_[static_cast<std::size_t>(j)] != Status::undecided) {
                if (status_[static_cast<std::size_t>(j)] != val) {
                    return false;
                }
                continue;
            }
            status_[static_cast<std::size_t>(j)] = val;
            trail_.push_back(j);
            for (int q : p_.slot_pairs[static_cast<std::size_t>(j)]) {
                auto qi = static_cast<std::size_t>(q);
                if (val == Status::in) {
                    ++included_[qi];
                } else {
                    ++excluded_[qi];
                }
                if (!review_pair(q)) {
                    return false;
                }
            }
            if (val == Status::in) {
                for (int q : p_.owner_pairs[static_cast<std::size_t>(j)]) {
                    if (!review_pair(q)) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    // Re-checks one constraint after a count or owner change, scheduling
    // forced assignments.
    bool review_pair(int q) {
        auto qi = static_cast<std::size_t>(q);
        const Pair& pair = p_.pairs[qi];
        int inc = included_[qi];
        int exc = excluded_[qi];
        Status owner = status_[static_cast<std::size_t>(pair.owner)];
        if (owner == Status::out) {
            return true;
        }
        bool impossible = exc >= 2 || inc >= p_.r + 1;
        if (owner == Status::undecided) {
            if (impossible) {
                queue_.emplace_back(pair.owner, Status::out);
            }
            return true;
        }
        if (impossible) {
            return false;
        }
        if (exc == 1) {
            for (int s : pair.slots) {
                if (status_[static_cast<std::size_t>(s)] == Status::undecided) {
                    queue_.emplace_back(s, Status::in);
                }
            }
        } else if (inc == p_.r) {
            for (int s : pair.slots) {
                if (status_[static_cast<std::size_t>(s)] == Status::undecided) {
                    queue_.emplace_back(s, Status::out);
                }
            }
        }
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            int j = trail_.back();
            trail_.pop_back();
            Status val = status_[static_cast<std::size_t>(j)];
            status_[static_cast<std::size_t>(j)] = Status::undecided;
            for (int q : p_.slot_pairs[static_cast<std::size_t>(j)]) {
                auto qi = static_cast<std::size_t>(q);
                if (val == Status::in) {
                    --included_[qi];
                } else {
                    --excluded_[qi];
                }
            }
        }
    }

    void dfs() {
        if (timed_out_) {
            return;
        }
        if ((++nodes_ & 1023) == 0 && std::chrono::steady_clock::now() >= deadline_) {
            timed_out_ = true;
            return;
        }
        int next = -1;
        for (std::size_t j = 0; j < status_.size(); ++j) {
            if (status_[j] == Status::undecided) {
                next = static_cast<int>(j);
                break;
            }
        }
        if (next < 0) {
            std::uint64_t mask = 0;
            for (std::size_t j = 0; j < status_.size(); ++j) {
                if (status_[j] == Status::in) {
                    mask |= std::uint64_t{1} << j;
                }
            }
            if (mask != 0 && mask_satisfies(p_, mask)) {
                solutions_.push_back(mask);
            }
            return;
        }
        for (Status value : {Status::in, Status::out}) {
            std::size_t mark = trail_.size();
            if (assign(next, value)) {
                dfs();
            }
            undo_to(mark);
            if (timed_out_) {
                return;
            }
        }
    }

    const Problem& p_;
    std::chrono::steady_clock::time_point deadline_;
    std::vector<Status> status_;
    std::vector<int> included_;
    std::vector<int> excluded_;
    std::vector<int> trail_;
    std::vector<std::pair<int, Status>> queue_;
    std::vector<std::uint64_t> solutions_;
    long long nodes_ = 0;
    bool timed_out_ = false;
};

Complex mask_to_complex(const Problem& p, std::uint64_t mask) {
    std::vector<std::vector<int>> facets;
    for (std::size_t i = 0; i < p.facets.size(); ++i) {
        if (mask & (std::uint64_t{1} << i)) {
            facets.push_back(p.facets[i]);
        }
    }
    return Complex::from_facets(p.n, facets);
}

} // namespace

SearchMode parse_search_mode(const std::string& s) {
    if (s == "exhaustive") {
        return SearchMode::exhaustive;
    }
    if (s == "backtracking") {
        return SearchMode::backtracking;
    }
    throw validation_error("unknown search mode '" + s + "'");
}

const char* search_mode_name(SearchMode mode) {
    return mode == SearchMode::exhaustive ? "exhaustive" : "backtracking";
}

SearchOutcome search_equality_complexes(int n, int r, SearchMode mode, double budget_seconds) {
    if (r < 1 || n < r + 1) {
        throw validation_error("search needs n >= r+1 >= 2");
    }
    Problem problem = build_problem(n, r);
    std::size_t m = problem.facets.size();
    if (mode == SearchMode::exhaustive && m > kExhaustiveCandidateCap) {
        throw validation_error("exhaustive search supports at most " +
                               std::to_string(kExhaustiveCandidateCap) +
                               " candidate facets, got " + std::to_string(m));
    }
    if (m > kBacktrackingCandidateCap) {
        throw validation_error("search supports at most " +
                               std::to_string(kBacktrackingCandidateCap) +
                               " candidate facets, got " + std::to_string(m));
    }

    auto start = std::chrono::steady_clock::now();
    std::vector<std::uint64_t> solution_masks;
    long long nodes = 0;
    bool exhaustive = false;

    if (mode == SearchMode::exhaustive) {
        std::uint64_t total = std::uint64_t{1} << m;
        for (std::uint64_t mask = 1; mask < total; ++mask) {
            if (mask_satisfies(problem, mask)) {
                solution_masks.push_back(mask);
            }
        }
        nodes = static_cast<long long>(total) - 1;
        exhaustive = true;
    } else {
        auto deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                    std::chrono::duration<double>(budget_seconds));
        Backtracker engine(problem, deadline);
        engine.run();
        solution_masks.assign(engine.solutions().begin(), engine.solutions().end());
        nodes = engine.nodes();
        exhaustive = !engine.timed_out();
    }

    std::map<std::vector<Face>, std::uint64_t> canonical_classes;
    for (std::uint64_t mask : solution_masks) {
        Complex k = mask_to_complex(problem, mask);
        canonical_classes.emplace(canonical_form(k), mask);
    }

    SearchOutcome outcome;
    for (const auto& [canon, mask] : canonical_classes) {
        std::vector<Face> facets = canon;
        Complex representative = Complex::from_facets(n, std::move(facets));
        if (!equality_condition(representative).satisfied) {
            throw std::logic_error("search produced a representative failing its own condition");
        }
        outcome.classes.push_back(std::move(representative));
    }
    std::sort(outcome.classes.begin(), outcome.classes.end(),
              [](const Complex& a, const Complex& b) {
                  if (a.facet_count() != b.facet_count()) {
                      return a.facet_count() < b.facet_count();
                  }
                  return a.facets() < b.facets();
              });
    outcome.labeled_solutions = static_cast<long long>(solution_masks.size());
    outcome.nodes_explored = nodes;
    outcome.exhaustive = exhaustive;
    outcome.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return outcome;
}

} // namespace scx
