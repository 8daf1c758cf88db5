#include <cstdio>
#include <vector>

#include <omp.h>

#include "splitoct/reconstruct.hpp"

using namespace splitoct;

namespace {

template <typename F>
double timed(F&& fn, int repeats) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        double t0 = omp_get_wtime();
        fn();
        double t1 = omp_get_wtime();
        if (t1 - t0 < best) best = t1 - t0;
    }
    return best;
}

void report(const char* label, double serial, double parallel, bool equal) {
    std::printf("%-28s serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx   %s\n", label,
                serial * 1e3, parallel * 1e3, serial / parallel,
                equal ? "results identical" : "RESULTS DIFFER");
}

}  // namespace

int main() {
    std::printf("threads available: %d\n\n", omp_get_max_threads());

    const SigmaAssignment anchors = default_anchors();

    for (int block : {5, 6, 7}) {
        ReconstructResult rs, rp;
        double ts = timed([&] { rs = reconstruct(anchors, {block}, ExecPolicy::Serial); }, 3);
        double tp = timed([&] { rp = reconstruct(anchors, {block}, ExecPolicy::Parallel); }, 3);
        bool equal = rs.blocks.size() == rp.blocks.size();
        for (std::size_t k = 0; equal && k < rs.blocks.size(); ++k)
            equal = rs.blocks[k].solutions == rp.blocks[k].solutions;
        char label[64];
        std::snprintf(label, sizeof label, "identity block %d sweep", block);
        report(label, ts, tp, equal);
    }

    const Matrix2 s0 = pauli(0);
    {
        std::vector<CubicMatrix> cs, cp;
        double ts = timed([&] { cs = find_matching_cubes(s0, s0, s0, ExecPolicy::Serial); }, 3);
        double tp = timed([&] { cp = find_matching_cubes(s0, s0, s0, ExecPolicy::Parallel); }, 3);
        report("cube lift sweep (identity)", ts, tp, cs == cp);
    }
    {
        const Matrix2 s1 = pauli(1);
        std::vector<CubicMatrix> cs, cp;
        double ts = timed([&] { cs = find_matching_cubes(s1, s0, s0, ExecPolicy::Serial); }, 3);
        double tp = timed([&] { cp = find_matching_cubes(s1, s0, s0, ExecPolicy::Parallel); }, 3);
        report("cube lift sweep (mixed)", ts, tp, cs == cp);
    }
    return 0;
}
