#include <chrono>
#include <cstdio>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "spalg/graded.hpp"

using namespace spalg;

namespace {

std::uint64_t lcg(std::uint64_t& s) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return s >> 33;
}

Matrix random_matrix(std::size_t r, std::size_t c, const Field& f, std::uint64_t& s) {
    Matrix m(r, c, f);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = f.of(static_cast<long long>(lcg(s) % 19) - 9);
    return m;
}

template <typename F>
double timed(F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    body();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

Presentation three_var_symmetric() {
    Field f;
    std::vector<Tensor> rels;
    const std::size_t pairs[3][2] = {{1, 2}, {2, 0}, {0, 1}};
    for (const auto& p : pairs) {
        Tensor r(3, 2, f);
        r.coeff({p[0], p[1]}) = f.one();
        r.coeff({p[1], p[0]}) = f.one();
        rels.push_back(r);
    }
    return {3, 2, TensorSubspace::span(rels)};
}

int report(const char* label, double serial, double parallel, bool match) {
    std::printf("%-34s serial %8.3fs   parallel %8.3fs   match: %s\n", label, serial, parallel,
                match ? "yes" : "NO");
    return match ? 0 : 1;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("kernel benchmark, %d OpenMP thread(s)\n", omp_get_max_threads());
#else
    std::printf("kernel benchmark, OpenMP unavailable (both runs serial)\n");
#endif

    int failures = 0;
    std::uint64_t seed = 0x5eed5eed5eed5eedULL;

    {
        Matrix a = random_matrix(150, 210, Field::rationals(), seed);
        Matrix b = a;
        std::vector<std::size_t> pa, pb;
        double ts = timed([&] { pa = a.rref(Kernel::serial); });
        double tp = timed([&] { pb = b.rref(Kernel::parallel); });
        failures += report("dense rref 150x210 over QQ", ts, tp, a == b && pa == pb);
    }

    {
        std::vector<std::size_t> hs, hp;
        double ts = timed([&] {
            set_default_kernel(Kernel::serial);
            GradedAlgebra alg(three_var_symmetric());
            hs = alg.hilbert_function(8);
        });
        double tp = timed([&] {
            set_default_kernel(Kernel::parallel);
            GradedAlgebra alg(three_var_symmetric());
            hp = alg.hilbert_function(8);
        });
        failures += report("degree-8 components, 3 variables", ts, tp, hs == hp);
    }

    {
        KoszulVerdict vs, vp;
        double ts = timed([&] {
            set_default_kernel(Kernel::serial);
            GradedAlgebra alg(three_var_symmetric());
            vs = alg.check_m_koszul(7);
        });
        double tp = timed([&] {
            set_default_kernel(Kernel::parallel);
            GradedAlgebra alg(three_var_symmetric());
            vp = alg.check_m_koszul(7);
        });
        failures += report("koszul certificate to degree 7", ts, tp,
                           vs.verified == vp.verified && vs.up_to == vp.up_to);
    }

    set_default_kernel(Kernel::parallel);
    return failures == 0 ? 0 : 1;
}
