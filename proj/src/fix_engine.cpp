#include "fix_engine.hpp"

#include <algorithm>
#include <bit>

namespace cliquecol::detail {

FixEngine::FixEngine(const Graph& g, const Params& params, Colouring start, Rng& rng, RunStats& stats,
                     FixObserver* observer)
    : g_(g),
      params_(params),
      sigma_(std::move(start)),
      rng_(rng),
      stats_(stats),
      observer_(observer),
      palette_(params.palette_size),
      words_((params.palette_size + 1 + 63) / 64)
{
    const std::size_t n = g.vertex_count();
    if (sigma_.size() != n) {
        throw std::invalid_argument("colouring size does not match the graph");
    }
    counts_.assign(n * (palette_ + 1), 0);
    available_.assign(n * words_, 0);
    list_size_.assign(n, static_cast<std::uint32_t>(palette_ + 1));
    for (Vertex v = 0; v < n; ++v) {
        for (std::size_t c = 1; c <= palette_; ++c) {
            available_[v * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
        }
    }
    Colouring initial = std::move(sigma_);
    sigma_ = all_blank(n);
    for (Vertex v = 0; v < n; ++v) {
        set_colour(v, initial[v]);
    }
    stamp_.assign(n, 0);
    depth_.assign(n, 0);
    local_counts_.assign(palette_ + 1, 0);
}

bool FixEngine::in_palette(Colour c) const
{
    return !c.is_blank() && c.index() >= 1 && static_cast<std::size_t>(c.index()) <= palette_;
}

void FixEngine::set_colour(Vertex u, Colour c)
{
    const Colour old = sigma_[u];
    if (old == c) {
        return;
    }
    sigma_[u] = c;
    const bool old_counted = in_palette(old);
    const bool new_counted = in_palette(c);
    for (Vertex w : g_.neighbours(u)) {
        std::uint32_t* row = &counts_[w * (palette_ + 1)];
        std::uint64_t* bits = &available_[w * words_];
        if (old_counted) {
            const auto k = static_cast<std::size_t>(old.index());
            if (--row[k] == 0) {
                bits[k / 64] |= std::uint64_t{1} << (k % 64);
                ++list_size_[w];
            }
        }
        if (new_counted) {
            const auto k = static_cast<std::size_t>(c.index());
            if (row[k]++ == 0) {
                bits[k / 64] &= ~(std::uint64_t{1} << (k % 64));
                --list_size_[w];
            }
        }
    }
}

std::size_t FixEngine::blank_mass(Vertex v) const
{
    // sum over c in L_v of |T_{v,c}| = sum over Blank neighbours x of |L_v ∩ L_x \ {Blank}|
    const std::uint64_t* own = available_bits(v);
    std::size_t mass = 0;
    for (Vertex x : g_.neighbours(v)) {
        if (!sigma_[x].is_blank()) {
            continue;
        }
        const std::uint64_t* other = available_bits(x);
        for (std::size_t i = 0; i < words_; ++i) {
            mass += static_cast<std::size_t>(std::popcount(own[i] & other[i]));
        }
    }
    return mass;
}

bool FixEngine::holds(Flaw flaw) const
{
    const std::size_t size = list_size(flaw.vertex);
    if (flaw.kind == FlawKind::B) {
        return list_too_small(size, params_.list_threshold);
    }
    return blank_mass_too_large(blank_mass(flaw.vertex), size, params_.list_threshold);
}

std::vector<Flaw> FixEngine::all_flaws() const
{
    std::vector<Flaw> flaws;
    for (FlawKind kind : {FlawKind::B, FlawKind::Z}) {
        for (Vertex v = 0; v < g_.vertex_count(); ++v) {
            if (holds({kind, v})) {
                flaws.push_back({kind, v});
            }
        }
    }
    return flaws;
}

std::optional<Flaw> FixEngine::first_flaw_near(Vertex center)
{
    if (++epoch_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
    }
    ball_.clear();
    ball_.push_back(center);
    stamp_[center] = epoch_;
    depth_[center] = 0;
    for (std::size_t head = 0; head < ball_.size(); ++head) {
        const Vertex u = ball_[head];
        if (depth_[u] == 3) {
            continue;
        }
        for (Vertex w : g_.neighbours(u)) {
            if (stamp_[w] != epoch_) {
                stamp_[w] = epoch_;
                depth_[w] = static_cast<std::uint8_t>(depth_[u] + 1);
                ball_.push_back(w);
            }
        }
    }
    std::sort(ball_.begin(), ball_.end());
    for (Vertex w : ball_) {
        if (depth_[w] <= 2 && holds({FlawKind::B, w})) {
            return Flaw{FlawKind::B, w};
        }
    }
    for (Vertex w : ball_) {
        if (holds({FlawKind::Z, w})) {
            return Flaw{FlawKind::Z, w};
        }
    }
    return std::nullopt;
}

void FixEngine::recolour(Vertex center)
{
    if (++epoch_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
    }
    const auto nbrs = g_.neighbours(center);
    for (Vertex u : nbrs) {
        stamp_[u] = epoch_;
    }

    // Draw every list against the colouring as it was before the step.
    drawn_.clear();
    ColourList& list = list_;
    for (Vertex u : nbrs) {
        std::copy_n(&counts_[u * (palette_ + 1)], palette_ + 1, local_counts_.begin());
        for (Vertex w : g_.neighbours(u)) {
            if (stamp_[w] == epoch_ && in_palette(sigma_[w])) {
                --local_counts_[static_cast<std::size_t>(sigma_[w].index())];
            }
        }
        list.assign(1, Blank);
        for (std::size_t c = 1; c <= palette_; ++c) {
            if (local_counts_[c] == 0) {
                list.push_back(Colour::of(static_cast<std::int32_t>(c)));
            }
        }
        if (observer_ != nullptr) {
            observer_->on_draw(sigma_, center, u, list);
        }
        drawn_.push_back(list[rng_.uniform_index(list.size())]);
    }
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        set_colour(nbrs[i], drawn_[i]);
    }
    ++stats_.recolour_steps;

    if (params_.debug_checks) {
        check_partial();
    }
    if (observer_ != nullptr) {
        observer_->on_recolour(sigma_, center);
    }
}

void FixEngine::check_partial() const
{
    const auto report = verify_partial(g_, sigma_);
    if (!report.ok) {
        throw InvariantError("recolouring produced a monochromatic maximal clique");
    }
}

void FixEngine::fix(Flaw flaw, std::size_t budget)
{
    struct Frame {
        Flaw flaw;
        std::vector<Flaw> before;  // debug_checks only
    };
    std::vector<Frame> stack;
    std::size_t spent = 0;

    auto enter = [&](Flaw f) {
        if (spent >= budget) {
            throw BudgetExhausted("fix budget of " + std::to_string(budget) + " recolouring steps exhausted at " +
                                      to_string(f),
                                  stats_);
        }
        if (observer_ != nullptr) {
            observer_->on_fix_enter(f, sigma_);
        }
        Frame frame{f, {}};
        if (params_.debug_checks) {
            frame.before = all_flaws();
        }
        ++spent;
        stats_.fix_log.push_back({f, stats_.recolour_steps});
        recolour(f.vertex);
        stack.push_back(std::move(frame));
    };

    auto leave = [&]() {
        const Frame& frame = stack.back();
        if (params_.debug_checks) {
            const auto after = all_flaws();
            if (std::binary_search(after.begin(), after.end(), frame.flaw) ||
                !std::includes(frame.before.begin(), frame.before.end(), after.begin(), after.end())) {
                throw InvariantError("fix of " + to_string(frame.flaw) + " left a new or unfixed flaw");
            }
        }
        if (observer_ != nullptr) {
            observer_->on_fix_exit(frame.flaw, sigma_);
        }
        stack.pop_back();
    };

    enter(flaw);
    while (!stack.empty()) {
        if (auto next = first_flaw_near(stack.back().flaw.vertex)) {
            enter(*next);
        } else {
            leave();
        }
    }
}

}  // namespace cliquecol::detail
