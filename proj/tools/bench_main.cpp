// Benchmark comparing the OpenMP kernels against their serial reference
// implementations.  Results are asserted equal before timings are reported.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "scfq/chartab.hpp"
#include "scfq/counting.hpp"
#include "scfq/parallel.hpp"
#include "scfq/symgrp.hpp"

using namespace scfq;

namespace {

double time_once(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool equal) {
    std::printf("%-34s %9.3f ms %9.3f ms   x%.2f   %s\n", name, serial * 1e3, parallel * 1e3,
                parallel > 0 ? serial / parallel : 0.0, equal ? "match" : "MISMATCH");
}

}  // namespace

int main() {
    std::printf("threads available: %d\n", hardware_threads());
    std::printf("%-34s %12s %12s %7s\n", "kernel", "serial", "openmp", "speedup");

    {
        Fq F(2);
        Counting cnt(F);
        ClassLabel B = class_label(F, jordan_block(F, 1, 3));
        std::vector<i64> a, b;
        double ts = time_once([&] { a = cnt.btil_row_serial(B, 5); });
        double tp = time_once([&] { b = cnt.btil_row(B, 5, Exec::openmp); });
        row("btil row, GL_5(2)", ts, tp, a == b);
    }
    {
        Fq F(3);
        Counting cnt(F);
        ClassLabel B = class_label(F, jordan_block(F, 1, 3));
        std::vector<i64> a, b;
        double ts = time_once([&] { a = cnt.btil_fr_row_serial(B, 4); });
        Counting cnt2(F);  // fresh memo so the parallel run does the same work
        double tp = time_once([&] { b = cnt2.btil_fr_row(B, 4, Exec::openmp); });
        row("btil_fr row, GL_4(3)", ts, tp, a == b);
    }
    {
        Fq F(2);
        auto gd = group_data(F, 4, 25000);
        std::vector<long long> a, b;
        double ts = time_once([&] { a = structure_constants_serial(F, *gd); });
        double tp = time_once([&] { b = structure_constants(F, *gd, Exec::openmp); });
        row("structure constants, GL_4(2)", ts, tp, a == b);
    }
    {
        Fq F(3);
        Counting cnt(F);
        CharTables ser(F, cnt);
        CharTables par(F, cnt);
        // warm the shared group enumeration so only the kernel is timed
        group_data(F, 3, 25000);
        group_data(F, 2, 25000);
        group_data(F, 1, 25000);
        std::vector<cplx> a, b;
        double ts = time_once([&] { a = ser.induce_direct(1, 0, 3, Exec::serial); });
        double tp = time_once([&] { b = par.induce_direct(1, 0, 3, Exec::openmp); });
        bool equal = a.size() == b.size();
        for (size_t i = 0; equal && i < a.size(); ++i) equal = a[i] == b[i];
        row("parabolic induction, GL_3(3)", ts, tp, equal);
    }
    {
        SymCharTable t3(3);
        std::vector<s64> a, b;
        double ts = time_once([&] { a = sym_induce_direct_serial(t3, 0, 8); });
        double tp = time_once([&] { b = sym_induce_direct(t3, 0, 8, Exec::openmp); });
        row("induced character, S_8", ts, tp, a == b);
    }
    return 0;
}
