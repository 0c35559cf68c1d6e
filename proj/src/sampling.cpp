#include "exls/sampling.hpp"

#include <random>
#include <stdexcept>
#include <vector>

#include "exls/e16k16.hpp"
#include "exls/embeddings.hpp"
#include "exls/vfalgebras.hpp"

namespace exls {

Algebra parse_algebra(const std::string &name) {
    if (name == "e510") return Algebra::E510;
    if (name == "e44") return Algebra::E44;
    if (name == "e16") return Algebra::E16;
    if (name == "k16") return Algebra::K16;
    throw std::invalid_argument("unknown algebra '" + name + "' (expected e510, e44, e16, k16)");
}

std::string algebra_name(Algebra a) {
    switch (a) {
        case Algebra::E510: return "e510";
        case Algebra::E44: return "e44";
        case Algebra::E16: return "e16";
        case Algebra::K16: return "k16";
    }
    return "?";
}

namespace {

using Rng = std::mt19937_64;

int uniform(Rng &rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Scalar random_coeff(Rng &rng) {
    switch (uniform(rng, 0, 6)) {
        case 0: return Scalar(1);
        case 1: return Scalar(-1);
        case 2: return Scalar(2);
        case 3: return Scalar::rational(-1, 2);
        case 4: return Scalar::sqrt2();
        case 5: return Scalar::imag();
        default: return Scalar(3);
    }
}

EvenMono random_mono(Rng &rng, int nv, int degree) {
    EvenMono m;
    for (int d = 0; d < degree; ++d) ++m.e[static_cast<std::size_t>(uniform(rng, 0, nv - 1))];
    return m;
}

/// Sum of 1..3 random generators of the given parity, retried until nonzero.
template <typename Elt, typename Gen>
Elt random_sum(Rng &rng, Gen gen) {
    for (;;) {
        Elt e = gen();
        int extra = uniform(rng, 0, 2);
        for (int i = 0; i < extra; ++i) e += gen();
        if (!e.is_zero()) return e;
    }
}

struct E510Sampler {
    int window;
    E510Elt operator()(Rng &rng, bool odd) const {
        return random_sum<E510Elt>(rng, [&] {
            Scalar c = random_coeff(rng);
            int deg = uniform(rng, 1, window + 1);
            PolySeries f = PolySeries::monomial(Vars::X1to5, random_mono(rng, 5, deg), c);
            if (odd) {
                int i = uniform(rng, 0, 4);
                return E510Elt::from_odd(form_d(DiffForm::monomial(Vars::X1to5, static_cast<VarMask>(1u << i), f)));
            }
            int i = uniform(rng, 0, 4), j = uniform(rng, 0, 3);
            if (j >= i) ++j;
            VectorField x = VectorField::partial(Vars::X1to5, i, ps_partial(f, j)) -
                            VectorField::partial(Vars::X1to5, j, ps_partial(f, i));
            return E510Elt::from_even(x);
        });
    }
    static bool parity(const E510Elt &e) { return e.even.is_zero(); }
};

struct E44Sampler {
    int window;
    E44Elt operator()(Rng &rng, bool odd) const {
        return random_sum<E44Elt>(rng, [&] {
            PolySeries f = PolySeries::monomial(Vars::X1to4, random_mono(rng, 4, uniform(rng, 0, window)), random_coeff(rng));
            int i = uniform(rng, 0, 3);
            E44Elt e;
            if (odd)
                e.odd = DiffForm::monomial(Vars::X1to4, static_cast<VarMask>(1u << i), f);
            else
                e.even = VectorField::partial(Vars::X1to4, i, f);
            return e;
        });
    }
    static bool parity(const E44Elt &e) { return e.even.is_zero(); }
};

struct E16Sampler {
    std::vector<E16Elt> even, odd;
    explicit E16Sampler(int window) {
        for (const E16Elt &b : e16_basis(window)) (b.is_even() ? even : odd).push_back(b);
    }
    E16Elt operator()(Rng &rng, bool want_odd) const {
        const auto &pool = want_odd ? odd : even;
        return random_sum<E16Elt>(rng, [&] {
            const E16Elt &b = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
            return random_coeff(rng) * b;
        });
    }
    static bool parity(const E16Elt &e) { return !e.is_even(); }
};

struct K16Sampler {
    int window;
    Coord coord = Coord::Rho;
    K16Elt operator()(Rng &rng, bool odd) const {
        return random_sum<K16Elt>(rng, [&] {
            GrassMask m;
            do m = static_cast<GrassMask>(uniform(rng, 0, 63));
            while ((popcount(m) % 2 == 1) != odd);
            return K16Elt::monomial(coord, uniform(rng, 0, window), m, random_coeff(rng));
        });
    }
    static bool parity(const K16Elt &f) { return popcount(f.terms().begin()->first.second) % 2 == 1; }
};

bool same(const E510Elt &a, const E510Elt &b) { return a.agrees_with(b); }
bool same(const E44Elt &a, const E44Elt &b) { return a.agrees_with(b); }
bool same(const E16Elt &a, const E16Elt &b) { return a.agrees_with(b); }
bool same(const K16Elt &a, const K16Elt &b) { return a == b; }

E510Elt br(const E510Elt &a, const E510Elt &b) { return bracket_e510(a, b); }
E44Elt br(const E44Elt &a, const E44Elt &b) { return bracket_e44(a, b); }
E16Elt br(const E16Elt &a, const E16Elt &b) { return bracket_e16(a, b); }
K16Elt br(const K16Elt &a, const K16Elt &b) { return bracket_k16(a, b); }

template <typename Elt, typename Sampler>
long run(VerifyReport &rep, const Sampler &sample, Rng &rng, long trials) {
    long nontrivial = 0;
    for (long t = 0; t < trials; ++t) {
        bool pa = uniform(rng, 0, 1), pb = uniform(rng, 0, 1), pc = uniform(rng, 0, 1);
        Elt a = sample(rng, pa), b = sample(rng, pb), c = sample(rng, pc);
        Scalar sab(pa && pb ? -1 : 1);

        Elt lhs = br(a, br(b, c));
        Elt rhs = br(br(a, b), c) + sab * br(b, br(a, c));
        nontrivial += !lhs.is_zero();
        rep.record(same(lhs, rhs), "jacobi a=" + a.str() + " ; b=" + b.str() + " ; c=" + c.str(), rhs.str(), lhs.str());

        Elt ab = br(a, b), ba = br(b, a);
        Elt want = Scalar(-1) * sab * ba;
        rep.record(same(ab, want), "antisymmetry a=" + a.str() + " ; b=" + b.str(), want.str(), ab.str());
    }
    return nontrivial;
}

}  // namespace

VerifyReport jacobi_check(Algebra alg, long trials, std::uint64_t seed, int window) {
    VerifyReport rep("jacobi-" + algebra_name(alg));
    ReportTimer timer(rep);
    rep.param("trials", trials);
    rep.param("seed", std::to_string(seed));
    rep.param("window", window);
    Rng rng(seed);
    long nontrivial = 0;
    switch (alg) {
        case Algebra::E510: nontrivial += run<E510Elt>(rep, E510Sampler{window}, rng, trials); break;
        case Algebra::E44: nontrivial += run<E44Elt>(rep, E44Sampler{window}, rng, trials); break;
        case Algebra::E16: nontrivial += run<E16Elt>(rep, E16Sampler(window), rng, trials); break;
        case Algebra::K16: {
            long half = trials / 2;
            nontrivial += run<K16Elt>(rep, K16Sampler{window, Coord::Rho}, rng, half);
            nontrivial += run<K16Elt>(rep, K16Sampler{window, Coord::XiEta}, rng, trials - half);
            break;
        }
    }
    rep.note = std::to_string(nontrivial) + " triples with nonzero [a,[b,c]]";
    return rep;
}

}  // namespace exls
