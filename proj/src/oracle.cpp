#include "svr/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include <fmt/format.h>

#include "svr/path_svr.hpp"
#include "svr/visibility.hpp"

namespace svr::oracle {

std::string_view to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Exhausted: return "exhausted";
        case SearchStatus::Capped: return "capped";
    }
    return "?";
}

std::string_view to_string(CellStatus s) {
    switch (s) {
        case CellStatus::Agree: return "agree";
        case CellStatus::Disagree: return "disagree";
        case CellStatus::Capped: return "capped";
    }
    return "?";
}

namespace {

template <class Pred>
std::optional<sat::Assignment> first_assignment(int nVars, Pred ok) {
    if (nVars < 0 || nVars > kMaxBooleanVars)
        throw std::invalid_argument(fmt::format("brute force supports 0..{} variables, got {}", kMaxBooleanVars, nVars));
    sat::Assignment a(nVars);
    const std::uint64_t total = std::uint64_t{1} << nVars;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        // v1 is the most significant bit, so masks enumerate bit strings in order.
        for (int v = 1; v <= nVars; ++v) a.set(v, (mask >> (nVars - v)) & 1);
        if (ok(a)) return a;
    }
    return std::nullopt;
}

}  // namespace

std::optional<sat::Assignment> brute_force_nae(const sat::NaeInstance& f) {
    return first_assignment(f.nVars, [&](const sat::Assignment& a) { return sat::nae_satisfies(f, a); });
}

std::optional<sat::Assignment> brute_force_sat(const sat::Cnf3Instance& f) {
    return first_assignment(f.nVars, [&](const sat::Assignment& a) { return sat::satisfies(f, a); });
}

namespace {

using Clock = std::chrono::steady_clock;

struct Span {
    std::int64_t lo, hi;
};

struct Candidate {
    Span x, y;
};

bool spans_meet(Span a, Span b) { return a.lo <= b.hi && b.lo <= a.hi; }

/// State shared by all workers of one search.
struct Shared {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> capped{false};
    std::atomic<std::size_t> bestRoot{std::numeric_limits<std::size_t>::max()};
    std::mutex mu;
    std::optional<Drawing> best;
    std::uint64_t maxNodes = 0;
    Clock::time_point deadline;
};

class Searcher {
public:
    Searcher(const GraphPair& g, ShapeKind family, const SearchBudget& budget, Shared& shared)
        : g_(g), family_(family), n_(g.n), shared_(shared), reqV_(matrix(g.edgesV)), reqH_(matrix(g.edgesH)) {
        if (family_ == ShapeKind::UnitSquare) {
            side_ = n_ + 1;
            maxCorner_ = budget.coordRange > 0 ? budget.coordRange : n_ * (n_ + 1);
        } else {
            maxRank_ = budget.coordRange > 0 ? budget.coordRange : 2 * n_;
            if (maxRank_ < 2 * n_ || maxRank_ > 62)
                throw std::invalid_argument(fmt::format("coordinate range {} outside {}..62", maxRank_, 2 * n_));
        }
        std::vector<int> degree(static_cast<std::size_t>(n_) + 1, 0);
        for (const EdgeSet* es : {&g.edgesV, &g.edgesH})
            for (const Edge& e : *es) ++degree[e.u], ++degree[e.v];
        order_.resize(static_cast<std::size_t>(n_));
        std::iota(order_.begin(), order_.end(), 1);
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return degree[a] > degree[b]; });
        spans_.assign(static_cast<std::size_t>(n_) + 1, Candidate{});
        shapes_.reserve(static_cast<std::size_t>(n_));
        placed_.reserve(static_cast<std::size_t>(n_));
    }

    /// Placements of the first vertex, after mirror quotienting.
    std::vector<Candidate> roots() const {
        std::vector<Candidate> out;
        for (Span x : spans(true))
            for (Span y : spans(false))
                if (mirror_canonical(x) && mirror_canonical(y)) out.push_back({x, y});
        return out;
    }

    void run_root(const Candidate& c, std::size_t rootIndex) {
        rootIndex_ = rootIndex;
        if (!count_node()) return;
        place(order_[0], c);
        if (blocked_ok()) dfs(1);
        unplace();
    }

private:
    using Matrix = std::vector<std::vector<char>>;

    Matrix matrix(const EdgeSet& es) const {
        Matrix m(static_cast<std::size_t>(n_) + 1, std::vector<char>(static_cast<std::size_t>(n_) + 1, 0));
        for (const Edge& e : es) m[e.u][e.v] = m[e.v][e.u] = 1;
        return m;
    }

    bool square() const { return family_ == ShapeKind::UnitSquare; }

    std::vector<Span> spans(bool xAxis) const {
        std::vector<Span> out;
        if (square()) {
            for (std::int64_t l = 0; l <= maxCorner_; ++l) out.push_back({l, l + side_});
            return out;
        }
        const std::uint64_t used = xAxis ? usedX_ : usedY_;
        for (std::int64_t l = 1; l <= maxRank_; ++l) {
            if (used >> l & 1) continue;
            for (std::int64_t r = l + 1; r <= maxRank_; ++r)
                if (!(used >> r & 1)) out.push_back({l, r});
        }
        return out;
    }

    bool mirror_canonical(Span s) const {
        if (family_ == ShapeKind::LShape) return true;
        if (square()) return 2 * s.lo <= maxCorner_;
        return s.lo + s.hi <= maxRank_ + 1;
    }

    Shape make(const Candidate& c) const {
        const Coord l{c.x.lo}, r{c.x.hi}, b{c.y.lo}, t{c.y.hi};
        switch (family_) {
            case ShapeKind::Rect: return Shape::rect(l, r, b, t);
            case ShapeKind::UnitSquare: return Shape::unit_square(l, b, Coord{side_});
            case ShapeKind::LShape: return Shape::lshape(l, b, r - l, t - b);
        }
        throw std::logic_error("unknown family");
    }

    // Necessary conditions on one projection against every placed vertex.
    bool x_ok(Vertex v, Span x) const {
        for (Vertex u : placed_) {
            const bool meet = spans_meet(x, spans_[u].x);
            if (reqV_[u][v] && !meet) return false;
            if (family_ != ShapeKind::LShape && reqH_[u][v] && meet) return false;
        }
        return true;
    }

    bool y_ok(Vertex v, Span x, Span y) const {
        for (Vertex u : placed_) {
            const bool meetY = spans_meet(y, spans_[u].y);
            if (reqH_[u][v] && !meetY) return false;
            if (family_ == ShapeKind::LShape) continue;
            if (reqV_[u][v] && meetY) return false;
            if (meetY && spans_meet(x, spans_[u].x)) return false;
        }
        return true;
    }

    bool disjoint_from_placed(const Shape& s) const {
        return std::all_of(shapes_.begin(), shapes_.end(), [&](const Shape& o) { return shapes_disjoint(s, o); });
    }

    void place(Vertex v, const Candidate& c) {
        spans_[v] = c;
        placed_.push_back(v);
        shapes_.push_back(make(c));
        if (!square()) {
            usedX_ |= std::uint64_t{1} << c.x.lo | std::uint64_t{1} << c.x.hi;
            usedY_ |= std::uint64_t{1} << c.y.lo | std::uint64_t{1} << c.y.hi;
        }
    }

    void unplace() {
        const Candidate c = spans_[placed_.back()];
        placed_.pop_back();
        shapes_.pop_back();
        if (!square()) {
            usedX_ &= ~(std::uint64_t{1} << c.x.lo | std::uint64_t{1} << c.x.hi);
            usedY_ &= ~(std::uint64_t{1} << c.y.lo | std::uint64_t{1} << c.y.hi);
        }
    }

    // Adding shapes only removes visibilities, so a required edge between
    // placed vertices that is already blocked stays blocked.
    bool blocked_ok() const {
        for (Axis axis : {Axis::Vertical, Axis::Horizontal}) {
            const Matrix& req = axis == Axis::Vertical ? reqV_ : reqH_;
            bool any = false;
            for (std::size_t i = 0; i < placed_.size() && !any; ++i)
                for (std::size_t j = i + 1; j < placed_.size() && !any; ++j) any = req[placed_[i]][placed_[j]];
            if (!any) continue;
            const EdgeSet seen = visibility_edges(shapes_, axis);
            for (std::size_t i = 0; i < placed_.size(); ++i)
                for (std::size_t j = i + 1; j < placed_.size(); ++j)
                    if (req[placed_[i]][placed_[j]] && !seen.count(Edge(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1))))
                        return false;
        }
        return true;
    }

    bool count_node() {
        if (shared_.stop.load(std::memory_order_relaxed)) return false;
        if (shared_.bestRoot.load(std::memory_order_relaxed) < rootIndex_) return false;
        const std::uint64_t k = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (k > shared_.maxNodes || ((k & 1023) == 0 && Clock::now() > shared_.deadline)) {
            shared_.capped = true;
            shared_.stop = true;
            return false;
        }
        return true;
    }

    void leaf() {
        if (square()) {
            // Translation quotient: only drawings touching both lattice axes.
            std::int64_t minX = maxCorner_, minY = maxCorner_;
            for (Vertex v = 1; v <= n_; ++v) minX = std::min(minX, spans_[v].x.lo), minY = std::min(minY, spans_[v].y.lo);
            if (minX != 0 || minY != 0) return;
        }
        Drawing d;
        d.family = family_;
        if (square()) d.unit = Coord{side_};
        for (Vertex v = 1; v <= n_; ++v) d.shapes.push_back(make(spans_[v]));
        if (!validate_svr(d, g_).valid()) return;
        std::lock_guard lock(shared_.mu);
        if (rootIndex_ < shared_.bestRoot) {
            shared_.bestRoot = rootIndex_;
            shared_.best = std::move(d);
        }
        found_ = true;
    }

    void dfs(int depth) {
        if (depth == n_) {
            leaf();
            return;
        }
        const Vertex v = order_[static_cast<std::size_t>(depth)];
        for (Span x : spans(true)) {
            if (!x_ok(v, x)) continue;
            for (Span y : spans(false)) {
                if (!y_ok(v, x, y)) continue;
                if (!count_node()) return;
                const Candidate c{x, y};
                const Shape s = make(c);
                if (!disjoint_from_placed(s)) continue;
                place(v, c);
                if (blocked_ok()) dfs(depth + 1);
                unplace();
                if (found_) return;
            }
        }
    }

    const GraphPair& g_;
    ShapeKind family_;
    int n_;
    Shared& shared_;
    Matrix reqV_, reqH_;
    std::vector<Vertex> order_;

    std::int64_t side_ = 0, maxCorner_ = 0, maxRank_ = 0;
    std::uint64_t usedX_ = 0, usedY_ = 0;

    std::vector<Candidate> spans_;  // by vertex, valid for placed ones
    std::vector<Vertex> placed_;
    std::vector<Shape> shapes_;     // parallel to placed_
    std::size_t rootIndex_ = 0;
    bool found_ = false;
};

}  // namespace

SearchResult brute_force_svr(const GraphPair& g, ShapeKind family, const SearchBudget& budget) {
    g.check();
    const auto start = Clock::now();
    SearchResult result;
    if (g.n == 0) {
        result.status = SearchStatus::Found;
        result.drawing = Drawing{family, family == ShapeKind::UnitSquare ? std::optional<Coord>(Coord{1}) : std::nullopt, {}};
        return result;
    }

    Shared shared;
    shared.maxNodes = budget.maxNodes;
    shared.deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(budget.timeLimitSeconds));

    const std::vector<Candidate> roots = Searcher(g, family, budget, shared).roots();
    const int workers = std::max(1, budget.workers);
    auto work = [&](int w) {
        Searcher s(g, family, budget, shared);
        for (std::size_t i = static_cast<std::size_t>(w); i < roots.size(); i += static_cast<std::size_t>(workers)) {
            if (shared.stop || shared.bestRoot < i) break;
            s.run_root(roots[i], i);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }

    result.nodes = shared.nodes.load();
    result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (shared.best) {
        result.status = SearchStatus::Found;
        result.drawing = std::move(shared.best);
    } else {
        result.status = shared.capped ? SearchStatus::Capped : SearchStatus::Exhausted;
    }
    return result;
}

namespace {

bool within_grid(const Drawing& d, int n) {
    const std::int64_t lo = 2 - n, hi = n + 1;
    for (const Shape& s : d.shapes)
        for (Coord c : {s.left(), s.right(), s.bottom(), s.top()})
            if (c.base < lo || c.base > hi) return false;
    return true;
}

}  // namespace

LsvrCheckReport exhaustive_lsvr_check(int nMax, int completenessMax, const SearchBudget& budget) {
    if (nMax < 1) throw std::invalid_argument("nMax must be at least 1");
    LsvrCheckReport report;
    report.nMax = nMax;
    report.completenessMax = completenessMax;
    for (int n = 1; n <= nMax; ++n) {
        std::vector<Vertex> pi(static_cast<std::size_t>(n));
        std::iota(pi.begin(), pi.end(), 1);
        int count = 0, rejected = 0;
        do {
            ++count;
            const PathPair p = PathPair::from_permutation(pi);
            const GraphPair g = p.graphs();
            LsvrCheckRow row;
            row.pi = pi;
            const paths::LsvrDecision dec = paths::decide_lsvr(p);
            row.accepted = dec.exists();
            if (row.accepted)
                row.sound = validate_svr(*dec.drawing, g).valid() && within_grid(*dec.drawing, n);
            else
                ++rejected;
            if (n <= completenessMax) {
                const SearchResult r = brute_force_svr(g, ShapeKind::LShape, budget);
                row.oracle = r.status;
                row.nodes = r.nodes;
                row.seconds = r.seconds;
                if (r.status == SearchStatus::Capped) {
                    row.status = CellStatus::Capped;
                    ++report.capped;
                } else if ((r.status == SearchStatus::Found) != row.accepted) {
                    row.status = CellStatus::Disagree;
                }
            }
            if (!row.sound) row.status = CellStatus::Disagree;
            if (row.status == CellStatus::Disagree) report.discrepancies.push_back(row);
            if (row.oracle) report.oracleRows.push_back(std::move(row));
        } while (std::next_permutation(pi.begin(), pi.end()));
        report.permutations.push_back(count);
        report.rejected.push_back(rejected);
    }
    return report;
}

}  // namespace svr::oracle
