// Compares the serial reference kernels against the OpenMP ones.
#include <chrono>
#include <iostream>
#include <random>

#include "sba/series.hpp"

using namespace sba;

namespace {

TorusMatrix random_matrix(std::mt19937_64& rng, const FieldDescriptor& f,
                          int rows, int cols, int precision) {
    TorusMatrix A(f, rows, cols, precision);
    std::uniform_int_distribution<std::uint64_t> pick(0, f.modulus - 1);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            std::vector<Scalar> c;
            for (int k = 0; k < precision; ++k)
                c.push_back(Scalar::residue(f.modulus, pick(rng)));
            A.set(i, j, LaurentTail(f, std::move(c)));
        }
    return A;
}

template <typename Fn>
double time_ms(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* label, double serial, double parallel) {
    std::cout << label << ": serial " << serial << " ms, parallel " << parallel
              << " ms, speedup " << serial / parallel << "\n";
}

} // namespace

int main(int argc, char** argv) {
    int scale = argc > 1 ? std::atoi(argv[1]) : 8;
    std::mt19937_64 rng(2024);
    FieldDescriptor f3 = FieldDescriptor::prime(3);

    TorusMatrix A = random_matrix(rng, f3, 2, 2, 2 * scale - 1);
    report("defect_scan",
           time_ms([&] { defect_scan(A, scale, scale, Exec::serial); }),
           time_ms([&] { defect_scan(A, scale, scale, Exec::parallel); }));

    TorusMatrix E(FieldDescriptor::rationals(), 1, 1, scale);
    E.set(0, 0, exp_tail(Scalar::one(FieldDescriptor::rationals()), scale));
    report("star_check",
           time_ms([&] { star_check(E, scale, Exec::serial); }),
           time_ms([&] { star_check(E, scale, Exec::parallel); }));

    TorusMatrix B = random_matrix(rng, f3, 2, 1, 2 * scale - 1);
    int degree = std::min(scale, 9);
    report("min_product_scan",
           time_ms([&] { min_product_scan(B, degree, Exec::serial); }),
           time_ms([&] { min_product_scan(B, degree, Exec::parallel); }));
    return 0;
}
