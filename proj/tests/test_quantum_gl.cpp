#include "doctest.h"

#include "ccn/quantum_gl.hpp"

using namespace ccn;

namespace {

Matrix M(std::size_t r, std::size_t c, std::vector<std::string> e) { return matrix_from_strings(r, c, e); }

Scalar S(const char* s) { return Scalar::parse(s); }

const GlParams kCases[] = {{2, 1}, {3, 1}, {4, 1}, {4, 2}};

// Entry of an N x N block matrix over aux (x) V: rho(x_{ij})_{kl}.
Matrix outer_transpose(const Matrix& m, int N) {
    Matrix r(m.nrows(), m.ncols());
    for (auto [row, col, v] : m.entries()) {
        std::size_t i = row / N, k = row % N, j = col / N, l = col % N;
        r.set(j * N + k, i * N + l, v);
    }
    return r;
}

}  // namespace

TEST_CASE("GlParams validation") {
    CHECK_NOTHROW((GlParams{2, 1}.validate()));
    CHECK_NOTHROW((GlParams{5, 2}.validate()));
    CHECK_THROWS_AS((GlParams{1, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((GlParams{4, 3}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((GlParams{4, 0}.validate()), std::invalid_argument);
}

TEST_CASE("R-matrix entries for N=2") {
    Matrix R = build_R({2, 1});
    // index kl -> (k-1)*2 + (l-1)
    CHECK(R.get(0, 0) == S("q"));
    CHECK(R.get(1, 1) == S("1"));
    CHECK(R.get(2, 2) == S("1"));
    CHECK(R.get(3, 3) == S("q"));
    CHECK(R.get(2, 1) == S("q - q^-1"));
    CHECK(R.nonzeros() == 5);
}

TEST_CASE("R inverse, Hecke relation and braid relation") {
    for (int N : {2, 3, 4}) {
        GlParams gp{N, 1};
        Matrix R = build_R(gp), Ri = build_R_inv(gp);
        CHECK(R * Ri == Matrix::identity(N * N));
        CHECK(braiding(gp) * braiding_inv(gp) == Matrix::identity(N * N));
        CHECK(hecke_check(braiding(gp), S("q")));
        TensorSpace sp{N, 3};
        Matrix s1 = embed(braiding(gp), {0, 1}, sp), s2 = embed(braiding(gp), {1, 2}, sp);
        CHECK(s1 * s2 * s1 == s2 * s1 * s2);
        Matrix R12 = embed(R, {0, 1}, sp), R13 = embed(R, {0, 2}, sp), R23 = embed(R, {1, 2}, sp);
        CHECK(R12 * R13 * R23 == R23 * R13 * R12);
    }
}

TEST_CASE("braiding images for N=2") {
    Matrix s = braiding({2, 1});
    // e1 (x) e1 -> q e1 (x) e1
    CHECK(s.get(0, 0) == S("q"));
    // e1 (x) e2 -> e2 (x) e1 + (q - q^-1) e1 (x) e2
    CHECK(s.get(2, 1) == S("1"));
    CHECK(s.get(1, 1) == S("q - q^-1"));
    CHECK(s.get(0, 1).is_zero());
    CHECK(s.get(3, 1).is_zero());
    CHECK(s.get(1, 2) == S("1"));
}

TEST_CASE("L-matrix families") {
    LMatrices L = build_l_matrices({2, 1});
    CHECK(L.plus(1, 1) == M(2, 2, {"q", "0", "0", "1"}));
    CHECK(L.plus(1, 2) == unit(2, 2, 1, S("q - q^-1")));
    CHECK(L.plus(2, 1).is_zero());
    CHECK(L.minus(1, 2).is_zero());

    for (const GlParams& gp : kCases) {
        const int N = gp.N;
        LMatrices L = build_l_matrices(gp);
        Matrix I = Matrix::identity(N);
        for (int i = 1; i <= N; ++i) {
            CHECK(L.plus(i, i) * L.minus(i, i) == I);
            for (int j = 1; j < i; ++j) {
                CHECK(L.plus(i, j).is_zero());
                CHECK(L.minus(j, i).is_zero());
            }
        }
        // antipode: sum_j x_{ij} S(x_{jk}) = sum_j S(x_{ij}) x_{jk} = delta_{ik}
        for (int i = 1; i <= N; ++i)
            for (int k = 1; k <= N; ++k) {
                Matrix a(N, N), b(N, N), c(N, N), d(N, N);
                for (int j = 1; j <= N; ++j) {
                    a = a + L.plus(i, j) * L.s_plus(j, k);
                    b = b + L.s_plus(i, j) * L.plus(j, k);
                    c = c + L.minus(i, j) * L.s_minus(j, k);
                    d = d + L.s_minus(i, j) * L.minus(j, k);
                }
                Matrix e = i == k ? I : Matrix(N, N);
                CHECK(a == e);
                CHECK(b == e);
                CHECK(c == e);
                CHECK(d == e);
            }
    }
}

TEST_CASE("RLL relations") {
    for (const GlParams& gp : kCases) {
        const int N = gp.N;
        LMatrices L = build_l_matrices(gp);
        TensorSpace sp{N, 3};
        Matrix Lp = block_matrix(N, L.lp), Lm = block_matrix(N, L.lm);
        Matrix R = embed(build_R(gp), {0, 1}, sp);
        auto one = [&](const Matrix& x) { return embed(x, {0, 2}, sp); };
        auto two = [&](const Matrix& x) { return embed(x, {1, 2}, sp); };
        CHECK(one(Lp) * two(Lp) * R == R * two(Lp) * one(Lp));
        CHECK(one(Lm) * two(Lm) * R == R * two(Lm) * one(Lm));
        CHECK(one(Lm) * two(Lp) * R == R * two(Lp) * one(Lm));
    }
}

TEST_CASE("square of the antipode is conjugation by the Drinfeld element") {
    for (const GlParams& gp : kCases) {
        const int N = gp.N;
        LMatrices L = build_l_matrices(gp);
        Matrix u = drinfeld_u(gp), ui = inverse(u);
        for (auto [fam, sfam] : {std::pair{&L.lp, &L.slp}, std::pair{&L.lm, &L.slm}}) {
            // S(S(x)): its outer transpose inverts the outer transpose of S(x)
            Matrix s2 = outer_transpose(inverse(outer_transpose(block_matrix(N, *sfam), N)), N);
            Matrix conj(N * N, N * N);
            for (int i = 1; i <= N; ++i)
                for (int j = 1; j <= N; ++j)
                    conj = conj + kron(unit(N, i, j), u * (*fam)[(i - 1) * N + (j - 1)] * ui);
            CHECK(s2 == conj);
        }
    }
}

TEST_CASE("J sigma matrices") {
    CHECK(build_J_sigma({2, 1}) == M(2, 2, {"qs - qs^-1", "1", "1", "0"}));
    CHECK(build_J_sigma({3, 1}) == M(3, 3, {"qs - qs^-1", "0", "1", "0", "-qs^-1", "0", "1", "0", "0"}));
    CHECK(build_J_prime({3, 1}) == M(3, 3, {"0", "0", "1", "0", "-1", "0", "1", "0", "0"}));
    for (const GlParams& gp : kCases) {
        Matrix J = build_J_sigma(gp);
        CHECK(J == J.transpose());
        CHECK(hecke_check(J, S("qs")));
        CHECK(J * build_J_inv(gp, S("qs")) == Matrix::identity(gp.N));
        CHECK(build_J_sigma(gp).map<Scalar>([](const Scalar& s) { return s.substitute({{qs, Scalar(1)}}); }) ==
              build_J_prime(gp));
    }
}

TEST_CASE("reflection equations") {
    for (const GlParams& gp : kCases) {
        const int N = gp.N;
        Matrix Z(N * N, N * N);
        CHECK(check_reflection(Matrix::identity(N), ReflectionSide::right, gp) == Z);
        CHECK(check_reflection(Matrix::identity(N), ReflectionSide::left, gp) == Z);
        Matrix J = build_J_sigma(gp);
        CHECK(check_reflection(J, ReflectionSide::right, gp) == Z);
        CHECK(check_reflection(build_J_inv(gp, S("qs")), ReflectionSide::left, gp) == Z);

        // R21 J1 R12 J2 = J2 R21 J1 R12 in leg notation
        TensorSpace sp{N, 2};
        Matrix R12 = build_R(gp), R21 = embed(build_R(gp), {1, 0}, sp);
        Matrix J1 = embed(J, {0}, sp), J2 = embed(J, {1}, sp);
        CHECK(R21 * J1 * R12 * J2 == J2 * R21 * J1 * R12);
        Matrix K = build_J_inv(gp, S("qs"));
        Matrix K1 = embed(K, {0}, sp), K2 = embed(K, {1}, sp);
        CHECK(K1 * R21 * K2 * R12 == R21 * K2 * R12 * K1);
    }
    // J^sigma does not solve the left-handed equation
    GlParams gp{2, 1};
    CHECK_FALSE(check_reflection(build_J_sigma(gp), ReflectionSide::left, gp).is_zero());
}

TEST_CASE("coideal generators") {
    GlParams gp{2, 1};
    LMatrices L = build_l_matrices(gp);
    Matrix J = build_J_sigma(gp);
    Matrix C = coideal_matrix(gp, 1);
    for (int i = 1; i <= 2; ++i)
        for (int l = 1; l <= 2; ++l) {
            Matrix c(2, 2);
            for (int j = 1; j <= 2; ++j)
                for (int k = 1; k <= 2; ++k) c = c + (L.plus(i, j) * L.s_minus(k, l)).scaled(J.get(j - 1, k - 1));
            CHECK(aux_block(C, 2, i, l) == c);
        }
    CHECK(coideal_matrix(gp, 0) == J);

    for (const GlParams& g : {GlParams{2, 1}, GlParams{3, 1}}) {
        CHECK(coideal_matrix(g, 1) == coideal_matrix_via_l(g, 1));
        CHECK(coideal_matrix(g, 2) == coideal_matrix_via_l(g, 2));
    }

    // reflection equation for the generators
    const int N = 2;
    TensorSpace sp{N, 3};
    Matrix c1 = embed(C, {0, 2}, sp), c2 = embed(C, {1, 2}, sp);
    Matrix R12 = embed(build_R(gp), {0, 1}, sp), R21 = embed(build_R(gp), {1, 0}, sp);
    CHECK(R21 * c1 * R12 * c2 == c2 * R21 * c1 * R12);
}

TEST_CASE("characters") {
    GlParams gp{2, 1};
    CharacterSpec chi = CharacterSpec::chi();
    CHECK(character_value(gp, chi, 2, 2).is_zero());
    CHECK(character_value(gp, chi, 1, 1) == S("qe*qt - qe*qt^-1"));
    CHECK(character_value(gp, chi, 1, 2) == S("qe"));
    CharacterSpec counit{CharacterSpec::Kind::chi, Scalar(1), Scalar::sym(qs)};
    for (const GlParams& g : kCases) CHECK(character_matrix(g, counit) == build_J_sigma(g));
    CharacterSpec lam = CharacterSpec::lambda();
    CHECK(character_value(gp, lam, 1, 1).is_zero());
    CHECK(character_value(gp, lam, 1, 2) == S("qo"));
    CHECK(character_value(gp, lam, 2, 2) == S("-qo*qn + qo*qn^-1"));
    CHECK_THROWS_AS(character_value(gp, chi, 3, 1), std::out_of_range);
}

TEST_CASE("tilde J") {
    Matrix t = build_tilde_J({2, 1});
    CHECK(t == M(2, 2, {"qt - qt^-1", "q^-1", "q", "0"}));
    CHECK(build_tilde_J({3, 1}).get(1, 1) == S("-q^-1*qt^-1"));
    for (const GlParams& gp : kCases) {
        Scalar x = Scalar::sym(q, gp.qdim() - gp.p) * Scalar::sym(qt);
        CHECK(hecke_check(build_tilde_J(gp), x));
        CHECK(build_tilde_J(gp) == tilde_J_via_drinfeld(gp));
    }
}
