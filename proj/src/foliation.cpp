#include "invgeo/foliation.hpp"

#include <algorithm>

namespace invgeo {

DistributionSplit DistributionSplit::from_vertical(std::size_t dim, std::vector<std::size_t> vertical) {
    std::sort(vertical.begin(), vertical.end());
    vertical.erase(std::unique(vertical.begin(), vertical.end()), vertical.end());
    if (vertical.empty() || vertical.size() >= dim) throw Error("vertical distribution must be nonempty and proper");
    if (vertical.back() >= dim) throw Error("vertical index out of range");
    DistributionSplit split;
    for (std::size_t i = 0; i < dim; ++i) {
        if (!std::binary_search(vertical.begin(), vertical.end(), i)) split.horizontal.push_back(i);
    }
    split.vertical = std::move(vertical);
    return split;
}

DistributionSplit DistributionSplit::of(const LieAlgebraSpec& g) {
    if (!g.vertical()) throw Error("no vertical distribution declared");
    return from_vertical(g.dim(), *g.vertical());
}

const Vector& SecondFundamentalForm::operator()(std::size_t a, std::size_t b) const {
    auto it = values.find({std::min(a, b), std::max(a, b)});
    if (it == values.end()) throw Error("second fundamental form evaluated outside its distribution");
    return it->second;
}

SecondFundamentalForm second_fundamental_form(const LieAlgebraSpec& g, const ConnectionTable& conn,
                                              const DistributionSplit& split, Distribution which) {
    const auto& inside = which == Distribution::vertical ? split.vertical : split.horizontal;
    const auto& outside = which == Distribution::vertical ? split.horizontal : split.vertical;
    const Rational half(1, 2);
    SecondFundamentalForm form{which, {}};
    for (std::size_t x = 0; x < inside.size(); ++x) {
        for (std::size_t y = x; y < inside.size(); ++y) {
            const std::size_t a = inside[x], b = inside[y];
            Vector sym = conn.nabla(a, b) + conn.nabla(b, a);
            Vector projected(g.dim());
            for (auto k : outside) projected[k] = half * sym[k];
            form.values.emplace(std::make_pair(a, b), std::move(projected));
        }
    }
    return form;
}

Conformality conformality(const LieAlgebraSpec& g, const ConnectionTable& conn, const DistributionSplit& split) {
    const auto bh = second_fundamental_form(g, conn, split, Distribution::horizontal);
    const auto& h = split.horizontal;
    Conformality out;
    for (std::size_t x = 0; x < h.size(); ++x) {
        for (std::size_t y = x + 1; y < h.size(); ++y) {
            for (const auto& c : bh(h[x], h[y]).components()) out.constraints.insert(c);
        }
    }
    const Vector& first = bh(h.front(), h.front());
    for (std::size_t x = 1; x < h.size(); ++x) {
        for (const auto& c : (bh(h[x], h[x]) - first).components()) out.constraints.insert(c);
    }
    if (out.constraints.empty()) out.mean_vector = first;
    return out;
}

FoliationPredicate parse_foliation_predicate(std::string_view name) {
    for (auto p : kFoliationPredicates) {
        if (to_string(p) == name) return p;
    }
    throw Error("unknown foliation predicate '" + std::string(name) + "'");
}

std::string_view to_string(FoliationPredicate p) {
    switch (p) {
        case FoliationPredicate::conformal: return "conformal";
        case FoliationPredicate::riemannian: return "riemannian";
        case FoliationPredicate::minimal: return "minimal";
        case FoliationPredicate::totally_geodesic: return "totally_geodesic";
        case FoliationPredicate::horizontal_integrable: return "horizontal_integrable";
    }
    return "unknown";
}

ConstraintSet predicate(const LieAlgebraSpec& g, const ConnectionTable& conn, const DistributionSplit& split,
                        FoliationPredicate which) {
    switch (which) {
        case FoliationPredicate::conformal:
            return conformality(g, conn, split).constraints;
        case FoliationPredicate::riemannian: {
            ConstraintSet out = conformality(g, conn, split).constraints;
            const auto bh = second_fundamental_form(g, conn, split, Distribution::horizontal);
            const auto h0 = split.horizontal.front();
            for (const auto& c : bh(h0, h0).components()) out.insert(c);
            return out;
        }
        case FoliationPredicate::minimal: {
            const auto bv = second_fundamental_form(g, conn, split, Distribution::vertical);
            Vector trace(g.dim());
            for (auto u : split.vertical) trace += bv(u, u);
            ConstraintSet out;
            for (const auto& c : trace.components()) out.insert(c);
            return out;
        }
        case FoliationPredicate::totally_geodesic: {
            const auto bv = second_fundamental_form(g, conn, split, Distribution::vertical);
            ConstraintSet out;
            for (const auto& [key, value] : bv.values)
                for (const auto& c : value.components()) out.insert(c);
            return out;
        }
        case FoliationPredicate::horizontal_integrable:
            return is_involutive(g, split.horizontal);
    }
    throw Error("unknown foliation predicate");
}

}  // namespace invgeo
