#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace kingman {

enum class Statistic { AbsorptionTime, TreeLength, ShiftedTreeLength };

std::string statistic_name(Statistic s);

struct SimConfig {
    int n = 2;                 // starting number of lineages, >= 2
    long long reps = 1;        // replicates, >= 1
    std::uint64_t seed = 0;    // stream key
    Statistic statistic = Statistic::AbsorptionTime;
};

// Replicate r is generated from a counter-based stream keyed on (seed, r):
// the draw for hold time j is a hash of (key_r, j), so the value of a
// replicate never depends on evaluation order or thread layout. Values are
// returned in replicate order.
std::vector<double> sample_values(const SimConfig& cfg);

// Summary statistics derived deterministically from the sample multiset:
// the values are kept sorted and every reduction is a fixed-shape pairwise
// sum over that order, so merging partial summaries is exactly associative.
class SampleSummary {
public:
    SampleSummary() = default;
    explicit SampleSummary(std::vector<double> values);

    long long count() const { return static_cast<long long>(values_.size()); }
    double mean() const { return mean_; }
    double variance() const;               // unbiased; 0 for count < 2
    double central_moment(int order) const;  // population, order in [2, 6]
    double min() const;
    double max() const;

    // Fraction of the sample <= x.
    double ecdf(double x) const;

    const std::vector<double>& sorted_values() const { return values_; }

    // Multiset union; the result is identical however a partition of the
    // data is grouped.
    static SampleSummary merge(const SampleSummary& a, const SampleSummary& b);

private:
    void recompute();
    std::vector<double> values_;  // sorted
    double mean_ = 0.0;
    double central_[7] = {0, 0, 0, 0, 0, 0, 0};
};

// Draws cfg.reps replicates and summarizes them.
SampleSummary sample(const SimConfig& cfg);

struct KsResult {
    double statistic = 0.0;  // sup-norm distance
    double critical = 0.0;   // asymptotic threshold at the requested level
    bool pass = false;       // statistic < critical
};

// One-sample Kolmogorov-Smirnov test against a continuous CDF.
KsResult ks_test(const std::vector<double>& sample,
                 const std::function<double(double)>& cdf, double alpha);
KsResult ks_test(const SampleSummary& summary,
                 const std::function<double(double)>& cdf, double alpha);

// Two-sample variant.
KsResult ks_test_two_sample(const std::vector<double>& a, const std::vector<double>& b,
                            double alpha);

// sqrt(-ln(alpha/2)/2): the asymptotic sup-norm critical value scale.
double ks_critical_scale(double alpha);

// One value per line after a header line recording statistic, seed and n.
void write_sample_csv(std::ostream& out, const SimConfig& cfg,
                      const std::vector<double>& values);

}  // namespace kingman
