// Times the serial reference path (--threads 1) against the OpenMP path on
// the bundled matrix families and checks that both return identical results.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rankforge/bases.hpp"
#include "rankforge/constructions.hpp"
#include "rankforge/ranks.hpp"

using namespace rankforge;

namespace {

double seconds(const std::function<void()>& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Row {
    std::string name;
    double serial = 0;
    double parallel = 0;
    bool equal = false;
};

Row bench_binary(const std::string& name, const BinaryMatrix& m) {
    SolverConfig serial{10000, 1};
    SolverConfig parallel{10000, 0};
    RankResult a{0, std::nullopt}, b{0, std::nullopt};
    Row row{name + " binary_rank", 0, 0, false};
    row.serial = seconds([&] { a = binary_rank(m, serial); });
    row.parallel = seconds([&] { b = binary_rank(m, parallel); });
    row.equal = a.rank == b.rank && a.witness == b.witness;
    return row;
}

Row bench_boolean(const std::string& name, const BinaryMatrix& m) {
    SolverConfig serial{10000, 1};
    SolverConfig parallel{10000, 0};
    RankResult a{0, std::nullopt}, b{0, std::nullopt};
    Row row{name + " boolean_rank", 0, 0, false};
    row.serial = seconds([&] { a = boolean_rank(m, serial); });
    row.parallel = seconds([&] { b = boolean_rank(m, parallel); });
    row.equal = a.rank == b.rank && a.witness == b.witness;
    return row;
}

Row bench_partitions(const std::string& name, const BinaryMatrix& m, int k) {
    SolverConfig serial{10000, 1};
    SolverConfig parallel{10000, 0};
    std::vector<RectangleSolution> a, b;
    Row row{name + " partition_solutions(k=" + std::to_string(k) + ")", 0, 0, false};
    row.serial = seconds([&] { a = partition_solutions(m, k, serial); });
    row.parallel = seconds([&] { b = partition_solutions(m, k, parallel); });
    row.equal = a == b;
    return row;
}

Row bench_graph(const std::string& name, const BinaryMatrix& m, Semiring s) {
    SolverConfig serial{10000, 1};
    SolverConfig parallel{10000, 0};
    Row row{name + " base_graph/" + to_string(s), 0, 0, false};
    std::vector<std::pair<int, int>> ea, eb;
    row.serial = seconds([&] { ea = base_graph(m, s, serial).edges; });
    row.parallel = seconds([&] { eb = base_graph(m, s, parallel).edges; });
    row.equal = ea == eb;
    return row;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads available: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns are serial\n");
#endif

    std::vector<Row> rows;
    rows.push_back(bench_binary("gap_binary d=2", build_gap_binary(2).matrix));
    rows.push_back(bench_binary("gap_binary d=3 (cap raised)",
                                build_gap_binary(3, SolverConfig{10000, 0}).matrix));
    rows.push_back(bench_boolean("gap_boolean d=2", build_gap_boolean(2).matrix));

    // an all-ones column fuses the two diagonal blocks into one search space
    BinaryMatrix gap2 = build_gap_binary(2).matrix;
    BinaryMatrix fused =
        augment(gap2, {ColumnVector::of_support(gap2.rows(), {0, 1, 2, 3, 4, 5, 6, 7})});
    rows.push_back(bench_binary("gap_binary d=2 fused by a full column", fused));

    Fixture a5 = build_Ak(5);
    std::vector<ColumnVector> xs;
    for (const auto& [name, v] : a5.vectors) xs.push_back(v);
    rows.push_back(bench_binary("a_k k=5 augmented", augment(a5.matrix, xs)));
    rows.push_back(bench_boolean("a_k k=5 augmented", augment(a5.matrix, xs)));

    BinaryMatrix stacked = tensor_identity(fixture("sec2_example").matrix, 3);
    rows.push_back(bench_partitions("sec2 stacked d=3", stacked, 9));
    rows.push_back(bench_graph("sec2 stacked d=3", stacked, Semiring::Binary));

    std::mt19937 rng(4242);
    for (int i = 0; i < 3; ++i) {
        BinaryMatrix::Builder b(7, 7);
        for (std::size_t r = 0; r < 7; ++r)
            for (std::size_t c = 0; c < 7; ++c)
                if (rng() % 100 < 55) b.set(r, c);
        BinaryMatrix m = b.build();
        if (m.is_all_zero()) continue;
        rows.push_back(bench_binary("random 7x7 #" + std::to_string(i), m));
        rows.push_back(bench_boolean("random 7x7 #" + std::to_string(i), m));
    }

    std::printf("%-44s %12s %12s %9s %s\n", "case", "serial [s]", "openmp [s]", "speedup",
                "equal");
    bool all_equal = true;
    for (const Row& row : rows) {
        std::printf("%-44s %12.4f %12.4f %8.2fx %s\n", row.name.c_str(), row.serial, row.parallel,
                    row.parallel > 0 ? row.serial / row.parallel : 0.0,
                    row.equal ? "yes" : "NO");
        all_equal &= row.equal;
    }
    if (!all_equal) {
        std::printf("result mismatch between serial and parallel paths\n");
        return 1;
    }
    return 0;
}
