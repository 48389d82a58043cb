#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "liecoh/chevalley.hpp"

using namespace liecoh;

namespace {

bool element_eq(const Element& x, const Element& y) { return x == y; }

Element scaled(const Element& x, const Rat& c) {
    Element out = x;
    for (Rat& v : out) v *= c;
    return out;
}

}  // namespace

TEST_CASE("structure constants of A2 are all unit") {
    RootSystem rs(CartanMatrix::from_label("A2"));
    ChevalleyAlgebra alg(rs);
    int composable = 0;
    for (int k = 0; k < alg.num_positive(); ++k)
        for (int l = 0; l < alg.num_positive(); ++l) {
            long long v = alg.n_constant(k, l);
            if (v == 0) continue;
            ++composable;
            CHECK((v == 1 || v == -1));
        }
    CHECK(composable == 2);  // (alpha1, alpha2) both ways
}

TEST_CASE("G2 reaches string length three") {
    RootSystem rs(CartanMatrix::from_label("G2"));
    ChevalleyAlgebra alg(rs);  // construction runs Jacobi + magnitude checks
    long long maxabs = 0;
    for (int k = 0; k < alg.num_positive(); ++k)
        for (int l = 0; l < alg.num_positive(); ++l)
            maxabs = std::max(maxabs, std::abs(alg.n_constant(k, l)));
    CHECK(maxabs == 3);
}

TEST_CASE("construction self-checks pass across types") {
    // the constructor verifies antisymmetry, the Jacobi identity on every
    // basis triple, and |N| = p+1 against string lengths; surviving it is
    // the assertion
    for (const char* label :
         {"A1", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "E6", "E7", "E8", "F4"}) {
        RootSystem rs(CartanMatrix::from_label(label));
        ChevalleyAlgebra alg(rs);
        CHECK(alg.dim() == rs.dim_algebra());
    }
    RootSystem f4(CartanMatrix::from_label("F4"));
    CHECK(ChevalleyAlgebra(f4).dim() == 52);
}

TEST_CASE("bracket relations with the Cartan") {
    RootSystem rs(CartanMatrix::from_label("B2"));
    ChevalleyAlgebra alg(rs);
    const auto& pos = rs.positive_roots();
    for (int i = 0; i < rs.rank(); ++i)
        for (int k = 0; k < alg.num_positive(); ++k) {
            Element he = alg.bracket(alg.basis_element(alg.h_index(i)),
                                     alg.basis_element(alg.e_index(k)));
            Element expect = scaled(alg.basis_element(alg.e_index(k)), rat_of(pos[k].fund[i]));
            CHECK(element_eq(he, expect));
        }
    // [x_r, x_{-r}] expands over the coroot coordinates
    for (int k = 0; k < alg.num_positive(); ++k) {
        Element ef = alg.bracket(alg.basis_element(alg.e_index(k)),
                                 alg.basis_element(alg.f_index(k)));
        for (int i = 0; i < rs.rank(); ++i) CHECK(ef[i] == rat_of(pos[k].coroot_c[i]));
    }
}

TEST_CASE("principal triple") {
    SECTION("A1 is the defining sl2") {
        RootSystem rs(CartanMatrix::from_label("A1"));
        ChevalleyAlgebra alg(rs);
        PrincipalTriple t = principal_triple(alg);
        CHECK(t.b == std::vector<long long>{1});
        CHECK(t.h == alg.basis_element(alg.h_index(0)));
        CHECK(t.e == alg.basis_element(alg.e_index(0)));
        CHECK(t.f == alg.basis_element(alg.f_index(0)));
    }
    SECTION("A2 coefficients") {
        RootSystem rs(CartanMatrix::from_label("A2"));
        PrincipalTriple t = principal_triple(ChevalleyAlgebra(rs));
        CHECK(t.b == std::vector<long long>{2, 2});
    }
    SECTION("G2 coefficients") {
        RootSystem rs(CartanMatrix::from_label("G2"));
        PrincipalTriple t = principal_triple(ChevalleyAlgebra(rs));
        CHECK(t.b == std::vector<long long>{10, 6});
    }
    SECTION("B2 residual is exactly zero") {
        RootSystem rs(CartanMatrix::from_label("B2"));
        ChevalleyAlgebra alg(rs);
        PrincipalTriple t = principal_triple(alg);
        Element ef = alg.bracket(t.e, t.f);
        for (int i = 0; i < alg.dim(); ++i) CHECK(ef[i] - t.h[i] == 0);
    }
}

TEST_CASE("centralizer of the principal nilpotent") {
    struct Row {
        const char* label;
        std::vector<int> degrees;
    };
    for (const Row& row : {Row{"A1", {2}}, Row{"A2", {2, 4}}, Row{"A3", {2, 4, 6}},
                           Row{"B2", {2, 6}}, Row{"C2", {2, 6}}, Row{"G2", {2, 10}},
                           Row{"D4", {2, 6, 6, 10}}}) {
        RootSystem rs(CartanMatrix::from_label(row.label));
        ChevalleyAlgebra alg(rs);
        PrincipalTriple t = principal_triple(alg);
        CentralizerBasis cb = centralizer_of_e(alg, t);
        INFO(row.label);
        CHECK(cb.degrees == row.degrees);
        CHECK(cb.elements.size() == static_cast<size_t>(rs.rank()));
        // lowest piece is e itself
        CHECK(element_eq(cb.elements[0], t.e));
    }
}

TEST_CASE("ad matrices") {
    RootSystem rs(CartanMatrix::from_label("A1"));
    ChevalleyAlgebra alg(rs);
    PrincipalTriple t = principal_triple(alg);

    Mat adh = alg.ad_matrix(t.h);
    for (int i = 0; i < alg.dim(); ++i)
        for (int j = 0; j < alg.dim(); ++j)
            if (i != j) CHECK(adh(i, j) == 0);

    Mat ade = alg.ad_matrix(t.e);
    Mat sq = ade * ade;
    CHECK(rank_of(sq) == 1);

    RootSystem a2(CartanMatrix::from_label("A2"));
    ChevalleyAlgebra alg2(a2);
    for (int a = 0; a < alg2.dim(); ++a)
        for (int b = 0; b < alg2.dim(); ++b) {
            Element x = alg2.basis_element(a), y = alg2.basis_element(b);
            Element xy = alg2.bracket(x, y), yx = alg2.bracket(y, x);
            for (int i = 0; i < alg2.dim(); ++i) CHECK(xy[i] == -yx[i]);
        }
}

TEST_CASE("permuted enumeration gives a valid convention") {
    for (const char* label : {"A3", "B2", "G2", "D4"}) {
        RootSystem rs(CartanMatrix::from_label(label));
        ChevalleyAlgebra base(rs);
        PrincipalTriple tb = principal_triple(base);
        CentralizerBasis cbb = centralizer_of_e(base, tb);
        for (unsigned long long seed : {1ULL, 2ULL, 3ULL}) {
            ChevalleyAlgebra alg(rs, seed);  // self-checks run again
            PrincipalTriple t = principal_triple(alg);
            CentralizerBasis cb = centralizer_of_e(alg, t);
            CHECK(t.b == tb.b);
            CHECK(cb.degrees == cbb.degrees);
        }
    }
}

TEST_CASE("structure constant cache") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "liecoh-cache-test";
    fs::create_directories(dir);
    fs::path file = dir / "constants.json";
    fs::remove(file);

    RootSystem rs(CartanMatrix::from_label("B2"));
    ChevalleyAlgebra alg(rs);

    alg.sync_cache_file(file.string());
    REQUIRE(fs::exists(file));
    // second sync diff-checks against the stored table
    CHECK_NOTHROW(alg.sync_cache_file(file.string()));

    // another type appends to the same file
    RootSystem a2(CartanMatrix::from_label("A2"));
    ChevalleyAlgebra alg2(a2);
    CHECK_NOTHROW(alg2.sync_cache_file(file.string()));
    CHECK_NOTHROW(alg.sync_cache_file(file.string()));

    {
        nlohmann::ordered_json doc;
        std::ifstream in(file);
        in >> doc;
        CHECK(doc["sign_convention"] == ChevalleyAlgebra::sign_convention());
        CHECK(doc["entries"].contains("B2"));
        CHECK(doc["entries"].contains("A2"));
    }

    SECTION("tampering is a hard error") {
        nlohmann::ordered_json doc;
        {
            std::ifstream in(file);
            in >> doc;
        }
        doc["entries"]["B2"]["constants"][0][2] = 99;
        {
            std::ofstream out(file);
            out << doc.dump(1);
        }
        CHECK_THROWS_AS(alg.sync_cache_file(file.string()), std::runtime_error);
    }

    SECTION("stale tag regenerates the file") {
        nlohmann::ordered_json doc;
        {
            std::ifstream in(file);
            in >> doc;
        }
        doc["sign_convention"] = "something-older";
        doc["entries"]["B2"]["constants"][0][2] = 99;  // stale junk goes away too
        {
            std::ofstream out(file);
            out << doc.dump(1);
        }
        CHECK_NOTHROW(alg.sync_cache_file(file.string()));
        nlohmann::ordered_json fresh;
        std::ifstream in(file);
        in >> fresh;
        CHECK(fresh["sign_convention"] == ChevalleyAlgebra::sign_convention());
        CHECK(fresh["entries"].contains("B2"));
        CHECK_FALSE(fresh["entries"].contains("A2"));
    }

    fs::remove_all(dir);
}
