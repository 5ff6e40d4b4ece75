// Clusters a handful of 2D points with two-fold redundancy and compares
// against the exact optimum.
#include <ftclust/ftclust.hpp>

#include <iostream>

int main() {
    using namespace ftclust;

    const Instance inst = Instance::from_points({
        {0.0, 0.0}, {0.1, 0.0}, {0.0, 0.2},
        {5.0, 5.0}, {5.2, 5.1}, {4.9, 5.0},
        {9.0, 0.0}, {9.1, 0.3},
    });

    const std::size_t k = 6;
    const std::size_t ell = 2;

    const FtSolveReport center = ft_center(inst, k, ell);
    const OracleResult best = brute_force_ftc(inst, k, ell);
    std::cout << "ft_center cost " << center.cost << " (optimum " << best.optimal_cost << ")\n  centers:";
    for (PointId c : center.final_centers) {
        std::cout << ' ' << c;
    }
    std::cout << '\n';

    const FtSolveReport median = ft_median(inst, k, ell);
    std::cout << "ft_median cost " << median.cost << " (optimum " << brute_force_ftm(inst, k, ell).optimal_cost
              << ")\n";
    return 0;
}
