#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "diffwalk/simd_kernels.hpp"

using namespace diffwalk::kernels;

namespace {

// deterministic pseudo-random doubles in [0, 1)
std::vector<double> random_values(std::size_t n, std::uint64_t seed) {
    std::vector<double> v(n);
    std::uint64_t s = seed * 2654435761ULL + 1;
    for (auto& x : v) {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        x = static_cast<double>(s >> 11) / 9007199254740992.0;
    }
    return v;
}

bool simd_variant_present() {
#if defined(__x86_64__) || defined(_M_X64)
    return avx2_available();
#elif defined(__ARM_NEON)
    return true;
#else
    return false;
#endif
}

const Kernels& simd_variant() {
#if defined(__x86_64__) || defined(_M_X64)
    return avx2_kernels;
#elif defined(__ARM_NEON)
    return neon_kernels;
#else
    return scalar_kernels;
#endif
}

}  // namespace

TEST_CASE("active kernel set is one of the known variants") {
    const std::string name = active().name;
    CHECK((name == "scalar" || name == "avx2" || name == "neon"));
}

TEST_CASE("simd stencil_1d matches scalar bit-for-bit") {
    if (!simd_variant_present()) return;
    const Kernels& simd = simd_variant();
    for (const std::size_t n : {3u, 4u, 5u, 8u, 17u, 100u, 1001u}) {
        const std::vector<double> phi = random_values(n, n);
        const std::vector<double> lam = random_values(n, n + 99);
        for (const Boundary b : {Boundary::Reflecting, Boundary::AbsorbingZero}) {
            std::vector<double> ref(n), out(n);
            scalar_kernels.stencil_1d(phi.data(), lam.data(), ref.data(), n, b);
            simd.stencil_1d(phi.data(), lam.data(), out.data(), n, b);
            for (std::size_t i = 0; i < n; ++i) CHECK(out[i] == ref[i]);
        }
    }
}

TEST_CASE("simd stencil_2d matches scalar bit-for-bit") {
    if (!simd_variant_present()) return;
    const Kernels& simd = simd_variant();
    const std::size_t shapes[][2] = {{3, 3}, {4, 5}, {8, 8}, {17, 9}, {90, 110}};
    for (const auto& shape : shapes) {
        const std::size_t w = shape[0], h = shape[1];
        const std::vector<double> phi = random_values(w * h, w * 31 + h);
        const std::vector<double> lam = random_values(w * h, w + h);
        for (const Boundary b : {Boundary::Reflecting, Boundary::AbsorbingZero}) {
            std::vector<double> ref(w * h), out(w * h);
            scalar_kernels.stencil_2d(phi.data(), lam.data(), ref.data(), w, h, b);
            simd.stencil_2d(phi.data(), lam.data(), out.data(), w, h, b);
            for (std::size_t i = 0; i < w * h; ++i) CHECK(out[i] == ref[i]);
        }
    }
}

TEST_CASE("simd matvec matches scalar within accumulation-order tolerance") {
    if (!simd_variant_present()) return;
    const Kernels& simd = simd_variant();
    for (const std::size_t m : {1u, 2u, 3u, 4u, 7u, 33u, 200u}) {
        const std::vector<double> mat = random_values(m * m, m * 7);
        const std::vector<double> x = random_values(m, m * 13);
        std::vector<double> ref(m), out(m);
        scalar_kernels.matvec(mat.data(), x.data(), ref.data(), m);
        simd.matvec(mat.data(), x.data(), out.data(), m);
        // blocked accumulation reorders the sum; difference bounded by fp noise
        for (std::size_t i = 0; i < m; ++i) {
            CHECK(out[i] == doctest::Approx(ref[i]).epsilon(1e-13));
        }
    }
}

TEST_CASE("scalar stencil_1d hand values") {
    const std::vector<double> phi = {0.0, 1.0, 0.0};
    const std::vector<double> lam = {0.1, 0.1, 0.1};
    std::vector<double> out(3);
    scalar_kernels.stencil_1d(phi.data(), lam.data(), out.data(), 3, Boundary::Reflecting);
    CHECK(out[0] == doctest::Approx(0.1));
    CHECK(out[1] == doctest::Approx(0.8));
    CHECK(out[2] == doctest::Approx(0.1));
    // absorbing: same here, the edge nodes hold no mass
    scalar_kernels.stencil_1d(phi.data(), lam.data(), out.data(), 3, Boundary::AbsorbingZero);
    CHECK(out[1] == doctest::Approx(0.8));
    const std::vector<double> edge = {1.0, 0.0, 0.0};
    scalar_kernels.stencil_1d(edge.data(), lam.data(), out.data(), 3, Boundary::Reflecting);
    CHECK(out[0] == doctest::Approx(0.9));  // mirrored ghost: only one outflow path
    scalar_kernels.stencil_1d(edge.data(), lam.data(), out.data(), 3, Boundary::AbsorbingZero);
    CHECK(out[0] == doctest::Approx(0.8));  // zero ghost drains the edge
}

TEST_CASE("scalar matvec hand values") {
    const std::vector<double> mat = {1.0, 2.0, 3.0, 4.0};
    const std::vector<double> x = {5.0, 6.0};
    std::vector<double> y(2);
    scalar_kernels.matvec(mat.data(), x.data(), y.data(), 2);
    CHECK(y[0] == 17.0);
    CHECK(y[1] == 39.0);
}
