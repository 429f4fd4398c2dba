#include "angulation/builder.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>

// Times the threaded disc enumerator against the serial reference on a few
// growing instances and checks they agree.  Usage: bench [max_c_m1 max_c_m2]

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

void run_case(int m, int c) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    auto serial = angulation::enumerate_disc_serial(m, c, c);
    auto t1 = clock::now();
    auto parallel = angulation::enumerate_disc(m, c, c);
    auto t2 = clock::now();
    bool same = serial.size() == parallel.size();
    for (size_t i = 0; same && i < serial.size(); ++i)
        same = serial[i].polygons == parallel[i].polygons;
    double ts = seconds(t0, t1), tp = seconds(t1, t2);
    std::cout << "m=" << m << " c=" << c << "  n=" << serial.size() << "  serial " << ts
              << "s  threaded " << tp << "s  speedup " << (tp > 0 ? ts / tp : 0.0)
              << (same ? "" : "  MISMATCH") << "\n";
    if (!same) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
    int max1 = argc > 1 ? std::atoi(argv[1]) : 15;
    int max2 = argc > 2 ? std::atoi(argv[2]) : 16;
    for (int c = 9; c <= max1; ++c) run_case(1, c);
    for (int c = 10; c <= max2; c += 2) run_case(2, c);
    return 0;
}
