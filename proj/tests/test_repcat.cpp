#include "hallforge/repcat.hpp"
#include "oracle/brute.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hallforge;
using gf::Matrix;

namespace {

gf::FieldPtr F(int p, int n = 1) { return gf::make_field(p, n); }

const std::vector<std::string> kFinite = {"hereditary-a2", "hereditary-a3", "ct-a3-cyclic", "ct-a4"};

int bound_for(const std::string& name) { return name == "hereditary-a2" ? 2 : name == "ct-a3-cyclic" ? 4 : 3; }

// Kronecker module of dimension (2,2): a = identity, b = companion of t^2+t+1.
Rep kronecker_d2(const AlgebraPtr& kr)
{
    auto f = kr->base();
    return Rep(kr, f, {2, 2}, {Matrix::from_ints(f, 2, 2, {1, 0, 0, 1}), Matrix::from_ints(f, 2, 2, {0, 1, 1, 1})});
}

Multiset merged(Multiset a, const Multiset& b)
{
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
}

} // namespace

TEST_SUITE("repcat")
{
    TEST_CASE("hom examples over A2")
    {
        auto a2 = preset("hereditary-a2", F(2));
        CHECK(hom_dim(projective(a2, 0), projective(a2, 0)) == 1);
        CHECK(hom_dim(simple(a2, 0), simple(a2, 1)) == 0);
        CHECK(hom_dim(projective(a2, 0), simple(a2, 1)) == 0);
        CHECK(hom_dim(simple(a2, 1), projective(a2, 0)) == 1);
        CHECK(error_of([&] { hom_dim(simple(a2, 0), simple(preset("hereditary-a2", F(3)), 0)); }) ==
              ErrorCode::MixedContext);
    }

    TEST_CASE("hom basis elements intertwine and are independent")
    {
        auto ct = preset("ct-a4", F(3));
        const IndecCatalog cat = list_indecomposables(ct, ct->base(), 3);
        for (const auto& x : cat.entries())
            for (const auto& y : cat.entries()) {
                const auto h = hom_basis(x.rep, y.rep);
                for (const auto& f : h.basis)
                    for (int a = 0; a < ct->quiver().arrow_count(); ++a) {
                        const auto& arr = ct->quiver().arrow(a);
                        CHECK(f[arr.target] * x.rep.mat(a) == y.rep.mat(a) * f[arr.source]);
                    }
                if (h.dim() > 0) {
                    std::vector<gf::Elem> rows;
                    for (const auto& f : h.basis) {
                        const auto flat = flatten(f);
                        rows.insert(rows.end(), flat.begin(), flat.end());
                    }
                    const Matrix m(ct->base(), h.dim(), rows.size() / h.dim(), rows);
                    CHECK(gf::rank(m) == h.dim());
                }
            }
    }

    TEST_CASE("direct sums")
    {
        auto a2 = preset("hereditary-a2", F(2));
        const Rep p1 = projective(a2, 0);
        CHECK(direct_sum(p1, Rep::zero(a2, a2->base())) == p1);
        const Rep s = direct_sum(simple(a2, 0), simple(a2, 1));
        CHECK(s.dims() == std::vector<int>{1, 1});
        CHECK(s.mat(0).is_zero());
    }

    TEST_CASE("hom is additive in both arguments")
    {
        for (const auto& name : kFinite) {
            auto alg = preset(name, F(2));
            const IndecCatalog cat = list_indecomposables(alg, alg->base(), 2);
            for (const auto& x : cat.entries())
                for (const auto& m : cat.entries())
                    for (const auto& n : cat.entries()) {
                        const Rep mn = direct_sum(m.rep, n.rep);
                        CHECK(hom_dim(x.rep, mn) == hom_dim(x.rep, m.rep) + hom_dim(x.rep, n.rep));
                        CHECK(hom_dim(mn, x.rep) == hom_dim(m.rep, x.rep) + hom_dim(n.rep, x.rep));
                    }
        }
    }

    TEST_CASE("isomorphism examples")
    {
        auto a2 = preset("hereditary-a2", F(3));
        auto f = a2->base();
        const Rep p1 = projective(a2, 0);
        const Rep twisted(a2, f, {1, 1}, {Matrix::from_ints(f, 1, 1, {2})});
        CHECK(is_isomorphic(p1, twisted));
        CHECK_FALSE(is_isomorphic(simple(a2, 0), simple(a2, 1)));
        const Rep s22(a2, f, {0, 2}, {Matrix(f, 2, 0)});
        CHECK(is_isomorphic(direct_sum(simple(a2, 1), simple(a2, 1)), s22));
        CHECK_FALSE(is_isomorphic(p1, direct_sum(simple(a2, 0), simple(a2, 1))));
    }

    TEST_CASE("decompose and is_indecomposable examples")
    {
        auto a2 = preset("hereditary-a2", F(2));
        const IndecCatalog cat = list_indecomposables(a2, a2->base(), 2);
        const int p1 = cat.index_of("P1"), s1 = cat.index_of("S1"), s2 = cat.index_of("S2");
        CHECK(decompose(direct_sum(projective(a2, 0), simple(a2, 1)), cat) == merged({p1}, {s2}));
        CHECK(decompose(simple(a2, 0), cat) == Multiset{s1});
        CHECK(decompose(direct_sum(projective(a2, 0), projective(a2, 0)), cat) == Multiset{p1, p1});

        CHECK(is_indecomposable(simple(a2, 0)));
        CHECK_FALSE(is_indecomposable(direct_sum(simple(a2, 0), simple(a2, 0))));
        CHECK(is_indecomposable(projective(preset("ct-a3-cyclic", F(2)), 0)));
        CHECK(error_of([&] { is_indecomposable(Rep::zero(a2, a2->base())); }) == ErrorCode::ZeroModule);
    }

    TEST_CASE("decompose outside the catalog")
    {
        auto a3 = preset("hereditary-a3", F(2));
        const IndecCatalog small = list_indecomposables(a3, a3->base(), 1);
        CHECK(error_of([&] { decompose(projective(a3, 0), small); }) == ErrorCode::NotInCatalog);
    }

    TEST_CASE("Krull-Schmidt on catalog pairs")
    {
        for (const auto& name : kFinite)
            for (int p : {2, 3}) {
                auto alg = preset(name, F(p));
                const IndecCatalog cat = list_indecomposables(alg, alg->base(), 3);
                for (int i = 0; i < cat.size(); ++i) {
                    CHECK(decompose(cat.entry(i).rep, cat) == Multiset{i});
                    for (int j = 0; j < cat.size(); ++j)
                        CHECK(decompose(direct_sum(cat.entry(i).rep, cat.entry(j).rep), cat) == merged({i}, {j}));
                }
            }
    }

    TEST_CASE("catalog examples and labels")
    {
        auto a2 = list_indecomposables(preset("hereditary-a2", F(2)), F(2), 2);
        CHECK(a2.size() == 3);
        auto ct = list_indecomposables(preset("ct-a3-cyclic", F(2)), F(2), 4);
        CHECK(ct.size() == 6);
        std::vector<std::string> labels;
        for (const auto& e : ct.entries())
            labels.push_back(e.label);
        // ordered by dimension vector
        CHECK(labels == std::vector<std::string>{"S3", "S2", "S1", "P2", "P3", "P1"});
        CHECK(list_indecomposables(preset("hereditary-a3", F(3)), F(3), 3).size() == 6);
    }

    TEST_CASE("catalog entries are indecomposable and pairwise distinct")
    {
        for (const auto& name : kFinite)
            for (int p : {2, 3}) {
                auto alg = preset(name, F(p));
                const IndecCatalog cat = list_indecomposables(alg, alg->base(), bound_for(name));
                for (int i = 0; i < cat.size(); ++i) {
                    const auto a = oracle::from_rep(cat.entry(i).rep);
                    CHECK(oracle::indecomposable(a));
                    CHECK(cat.entry(i).residue_degree == 1);
                    for (int j = 0; j < i; ++j)
                        CHECK_FALSE(oracle::isomorphic(a, oracle::from_rep(cat.entry(j).rep)));
                }
            }
    }

    TEST_CASE("catalog sizes match brute-force enumeration")
    {
        for (const auto& name : std::vector<std::string>{"hereditary-a2", "hereditary-a3", "ct-a3-cyclic"})
            for (int p : {2, 3}) {
                auto alg = preset(name, F(p));
                const int bound = name == "ct-a3-cyclic" ? 3 : bound_for(name);
                const IndecCatalog cat = list_indecomposables(alg, alg->base(), bound);
                const auto shape = oracle::from_rep(simple(alg, 0));
                CHECK_MESSAGE(oracle::count_indecomposables(shape, bound) == cat.size(), name << " p=" << p);
            }
    }

    TEST_CASE("catalog is deterministic")
    {
        auto alg = preset("ct-a4", F(3));
        const auto a = list_indecomposables(alg, alg->base(), 3);
        const auto b = list_indecomposables(alg, alg->base(), 3);
        REQUIRE(a.size() == b.size());
        for (int i = 0; i < a.size(); ++i) {
            CHECK(a.entry(i).label == b.entry(i).label);
            CHECK(a.entry(i).rep == b.entry(i).rep);
        }
    }

    TEST_CASE("catalog budget")
    {
        auto alg = preset("kronecker", F(3));
        Budgets tight;
        tight.candidates = 10;
        CHECK(error_of([&] { list_indecomposables(alg, alg->base(), 4, tight); }) == ErrorCode::BudgetExceeded);
    }

    TEST_CASE("label parsing")
    {
        auto cat = list_indecomposables(preset("hereditary-a2", F(2)), F(2), 2);
        const Multiset m = parse_labels(cat, "S2+P1+S2");
        CHECK(format_labels(cat, m) == "S2+S2+P1");
        CHECK(parse_labels(cat, "0").empty());
        CHECK(format_labels(cat, {}) == "0");
        CHECK(dims_of(cat, m) == std::vector<int>{1, 3});
        CHECK(error_of([&] { parse_labels(cat, "Q7"); }) == ErrorCode::ParseError);
        CHECK(error_of([&] { parse_labels(cat, "S1++S2"); }) == ErrorCode::ParseError);
    }
}

TEST_SUITE("repcat")
{
    TEST_CASE("minimal projective presentations")
    {
        auto a2 = preset("hereditary-a2", F(2));
        const auto s1 = min_projective_presentation(simple(a2, 0));
        CHECK(s1.p0_vertices == std::vector<int>{0});
        CHECK(s1.p1_vertices == std::vector<int>{1});
        CHECK(s1.kernel.dims() == std::vector<int>{0, 1});
        CHECK(min_projective_presentation(projective(a2, 0)).p1_vertices.empty());

        auto ct = preset("ct-a3-cyclic", F(2));
        const auto c1 = min_projective_presentation(simple(ct, 0));
        CHECK(c1.p0_vertices == std::vector<int>{0});
        CHECK(c1.p1_vertices == std::vector<int>{1});
        CHECK(error_of([&] { min_projective_presentation(Rep::zero(ct, ct->base())); }) == ErrorCode::ZeroModule);
    }

    TEST_CASE("presentation maps compose to zero and cover M")
    {
        for (const auto& name : kFinite) {
            auto alg = preset(name, F(3));
            const IndecCatalog cat = list_indecomposables(alg, alg->base(), 3);
            for (const auto& e : cat.entries()) {
                const auto pr = min_projective_presentation(e.rep);
                int top = 0;
                for (int v = 0; v < alg->vertex_count(); ++v) {
                    CHECK(gf::rank(pr.cover[v]) == e.rep.dim(v));
                    if (!pr.relations.empty() && pr.relations[v].cols() > 0 && pr.cover[v].rows() > 0)
                        CHECK((pr.cover[v] * pr.relations[v]).is_zero());
                }
                top = static_cast<int>(pr.p0_vertices.size());
                CHECK(top >= 1);
                CHECK(pr.kernel.total_dim() == pr.p0.total_dim() - e.rep.total_dim());
            }
        }
    }

    TEST_CASE("ext1 examples")
    {
        auto a2 = preset("hereditary-a2", F(2));
        CHECK(ext1_dim(simple(a2, 0), simple(a2, 1)) == 1);
        CHECK(ext1_dim(simple(a2, 1), simple(a2, 0)) == 0);
        auto ct = preset("ct-a3-cyclic", F(2));
        CHECK(ext1_dim(simple(ct, 0), simple(ct, 1)) == 1);
        for (const auto& name : kFinite) {
            auto alg = preset(name, F(3));
            const IndecCatalog cat = list_indecomposables(alg, alg->base(), 3);
            for (int v = 0; v < alg->vertex_count(); ++v)
                for (const auto& x : cat.entries())
                    CHECK(ext1_dim(projective(alg, v), x.rep) == 0);
        }
    }

    TEST_CASE("ext1 agrees with counting extensions")
    {
        for (const auto& name : kFinite)
            for (int p : {2, 3}) {
                auto alg = preset(name, F(p));
                const IndecCatalog cat = list_indecomposables(alg, alg->base(), 3);
                std::vector<Rep> mods;
                for (const auto& e : cat.entries())
                    mods.push_back(e.rep);
                if (p == 2)
                    for (int i = 0; i < cat.size(); ++i)
                        for (int j = i; j < cat.size(); ++j)
                            if (cat.entry(i).rep.total_dim() + cat.entry(j).rep.total_dim() <= 3)
                                mods.push_back(direct_sum(cat.entry(i).rep, cat.entry(j).rep));
                for (const auto& m : mods)
                    for (const auto& n : mods) {
                        if (p == 3 && m.total_dim() + n.total_dim() > 4)
                            continue;
                        CHECK_MESSAGE(ext1_dim(m, n) == oracle::ext1_by_counting(oracle::from_rep(m),
                                                                                  oracle::from_rep(n)),
                                      name << " p=" << p);
                    }
            }
    }

    TEST_CASE("tau examples")
    {
        auto a2 = preset("hereditary-a2", F(2));
        CHECK(tau(projective(a2, 0)).is_zero());
        CHECK(is_isomorphic(tau(simple(a2, 0)), simple(a2, 1)));
        auto ct = preset("ct-a3-cyclic", F(2));
        CHECK(is_isomorphic(tau(simple(ct, 0)), simple(ct, 1)));
        CHECK(error_of([&] { tau(Rep::zero(ct, ct->base())); }) == ErrorCode::ZeroModule);
    }

    TEST_CASE("tau vanishes exactly on projectives")
    {
        for (const auto& name : kFinite)
            for (int p : {2, 3}) {
                auto alg = preset(name, F(p));
                const IndecCatalog cat = list_indecomposables(alg, alg->base(), bound_for(name));
                for (const auto& e : cat.entries()) {
                    bool proj = false;
                    for (int v = 0; v < alg->vertex_count(); ++v)
                        proj = proj || is_isomorphic(e.rep, projective(alg, v));
                    const Rep t = tau(e.rep);
                    CHECK_MESSAGE(t.is_zero() == proj, name << " " << e.label);
                    CHECK(t.satisfies_relations());
                    if (!t.is_zero())
                        CHECK(is_indecomposable(t));
                }
            }
    }

    TEST_CASE("stable hom examples")
    {
        auto a2 = preset("hereditary-a2", F(2));
        CHECK(stable_hom_dim(simple(a2, 1), tau(simple(a2, 0))) == 1);
        CHECK(stable_hom_dim(simple(a2, 0), simple(a2, 0)) == 0);
        for (const auto& name : kFinite) {
            auto alg = preset(name, F(2));
            const IndecCatalog cat = list_indecomposables(alg, alg->base(), 3);
            for (int v = 0; v < alg->vertex_count(); ++v)
                for (const auto& x : cat.entries()) {
                    CHECK(stable_hom_dim(injective(alg, v), x.rep) == 0);
                    CHECK(stable_hom_dim(x.rep, Rep::zero(alg, alg->base())) == 0);
                }
        }
    }

    TEST_CASE("injective envelope embeds")
    {
        for (const auto& name : kFinite) {
            auto alg = preset(name, F(3));
            const IndecCatalog cat = list_indecomposables(alg, alg->base(), 3);
            for (const auto& e : cat.entries()) {
                const auto env = injective_envelope(e.rep);
                for (int v = 0; v < alg->vertex_count(); ++v)
                    CHECK(gf::rank(env.embedding[v]) == e.rep.dim(v));
            }
        }
    }

    TEST_CASE("AR formula on every catalog pair")
    {
        for (const auto& name : kFinite)
            for (int p : {2, 3}) {
                auto alg = preset(name, F(p));
                const IndecCatalog cat = list_indecomposables(alg, alg->base(), bound_for(name));
                for (const auto& m : cat.entries()) {
                    const Rep t = tau(m.rep);
                    for (const auto& n : cat.entries())
                        CHECK_MESSAGE(ext1_dim(m.rep, n.rep) == stable_hom_dim(n.rep, t),
                                      name << " p=" << p << " " << m.label << " " << n.label);
                }
            }
    }
}

TEST_SUITE("repcat")
{
    TEST_CASE("base change examples")
    {
        auto a2 = preset("hereditary-a2", F(2));
        const Rep s1 = base_change(simple(a2, 0), F(2, 2));
        CHECK(s1.dims() == std::vector<int>{1, 0});
        CHECK(s1.field() == F(2, 2));
        CHECK(is_indecomposable(s1));
        const Rep p8 = base_change(projective(a2, 0), F(2, 3));
        CHECK(p8.mat(0) == projective(a2, 0).mat(0).with_field(F(2, 3)));
        CHECK(p8.satisfies_relations());
        CHECK(error_of([&] { base_change(simple(a2, 0), F(3, 2)); }) == ErrorCode::CharacteristicMismatch);
        CHECK(error_of([&] { base_change(s1, F(2, 4)); }) == ErrorCode::NotPrimeBase);
    }

    TEST_CASE("residue degrees")
    {
        auto a2 = preset("hereditary-a2", F(2));
        CHECK(residue_degree(simple(a2, 0)) == 1);
        CHECK(residue_degree(projective(a2, 0)) == 1);
        CHECK(residue_degree(kronecker_d2(preset("kronecker", F(2)))) == 2);
        CHECK(error_of([&] { residue_degree(direct_sum(simple(a2, 0), simple(a2, 0))); }) ==
              ErrorCode::NotIndecomposable);
    }

    TEST_CASE("Kronecker module splits over F_4 and not over F_8")
    {
        auto kr = preset("kronecker", F(2));
        const Rep k = kronecker_d2(kr);
        CHECK(is_indecomposable(k));
        CHECK(hom_dim(k, k) == 2);

        const Rep k4 = base_change(k, F(2, 2));
        CHECK_FALSE(is_indecomposable(k4));
        const IndecCatalog cat4 = list_indecomposables(kr, F(2, 2), 2);
        const Multiset parts = decompose(k4, cat4);
        REQUIRE(parts.size() == 2);
        CHECK(parts[0] != parts[1]);
        for (int i : parts)
            CHECK(cat4.entry(i).rep.dims() == std::vector<int>{1, 1});

        const Rep k8 = base_change(k, F(2, 3));
        CHECK(is_indecomposable(k8));
        CHECK(residue_degree(k8) == 2);
    }

    TEST_CASE("base change along conservative degrees keeps catalogs indecomposable")
    {
        for (const auto& name : kFinite) {
            auto alg = preset(name, F(2));
            const IndecCatalog cat = list_indecomposables(alg, alg->base(), 3);
            for (int n : {2, 3}) {
                const IndecCatalog ext = base_change(cat, F(2, n));
                REQUIRE(ext.size() == cat.size());
                for (const auto& e : ext.entries())
                    CHECK(is_indecomposable(e.rep));
            }
        }
        auto kr = preset("kronecker", F(2));
        IndecCatalog cat = list_indecomposables(kr, kr->base(), 2);
        cat.add_entry("K", kronecker_d2(kr));
        CHECK(error_of([&] { base_change(cat, F(2, 2)); }) == ErrorCode::NotConservative);
        CHECK(base_change(cat, F(2, 3)).size() == cat.size());
    }

    TEST_CASE("add_entry checks")
    {
        auto kr = preset("kronecker", F(2));
        IndecCatalog cat = list_indecomposables(kr, kr->base(), 2);
        CHECK(error_of([&] { cat.add_entry("S1", kronecker_d2(kr)); }) == ErrorCode::InvalidArgument);
        CHECK(error_of([&] { cat.add_entry("X", direct_sum(simple(kr, 0), simple(kr, 0))); }) ==
              ErrorCode::NotIndecomposable);
        CHECK(error_of([&] { cat.add_entry("Y", simple(preset("kronecker", F(3)), 0)); }) ==
              ErrorCode::MixedContext);
        const int i = cat.add_entry("K", kronecker_d2(kr));
        CHECK(cat.entry(i).residue_degree == 2);
    }

    TEST_CASE("module text round trip")
    {
        for (const auto& name : kFinite) {
            auto alg = preset(name, F(3));
            const IndecCatalog cat = list_indecomposables(alg, alg->base(), 3);
            for (const auto& e : cat.entries()) {
                CHECK(parse_module(print_module(e.rep), alg, alg->base()) == e.rep);
                const Rep ext = base_change(e.rep, F(3, 2));
                CHECK(parse_module(print_module(ext), alg, F(3, 2)) == ext);
            }
        }
        auto kr = preset("kronecker", F(2));
        const Rep k4 = base_change(kronecker_d2(kr), F(2, 2));
        const std::string text = print_module(k4);
        CHECK(text.find("field 2 2") != std::string::npos);
        CHECK(parse_module(text, kr, F(2, 2)) == k4);
        CHECK(error_of([&] { parse_module("dims 1 1\n", kr, kr->base()); }) == ErrorCode::ParseError);
    }
}
