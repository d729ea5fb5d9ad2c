#include "kingman/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace kingman {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// Finalizer-style 64-bit mix; full avalanche, so (key + j) -> draw j acts as
// a counter-based generator.
std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

// Uniform in (0, 1]: 53 high bits shifted into the mantissa, plus one ulp so
// log() is always finite.
double uniform_open(std::uint64_t raw) {
    return static_cast<double>((raw >> 11) + 1) * 0x1.0p-53;
}

double pairwise_accumulate(const std::vector<double>& v, std::size_t lo, std::size_t len,
                           const std::function<double(double)>& f) {
    if (len <= 8) {
        double s = 0.0;
        for (std::size_t i = lo; i < lo + len; ++i) s += f(v[i]);
        return s;
    }
    std::size_t half = len / 2;
    return pairwise_accumulate(v, lo, half, f) + pairwise_accumulate(v, lo + half, len - half, f);
}

}  // namespace

std::string statistic_name(Statistic s) {
    switch (s) {
        case Statistic::AbsorptionTime: return "absorption-time";
        case Statistic::TreeLength: return "tree-length";
        case Statistic::ShiftedTreeLength: return "shifted-tree-length";
    }
    throw std::domain_error("statistic_name: unknown statistic");
}

std::vector<double> sample_values(const SimConfig& cfg) {
    if (cfg.n < 2) throw std::domain_error("sample_values: need n >= 2");
    if (cfg.reps < 1) throw std::domain_error("sample_values: need reps >= 1");
    if (cfg.reps > 20000000LL) throw std::length_error("sample_values: replicate budget exceeded");

    std::vector<double> out(static_cast<std::size_t>(cfg.reps));
    double logn = std::log(static_cast<double>(cfg.n));
    for (long long r = 0; r < cfg.reps; ++r) {
        std::uint64_t key = mix64(cfg.seed + kGolden * (static_cast<std::uint64_t>(r) + 1));
        double t = 0.0;
        double l = 0.0;
        for (int k = cfg.n; k >= 2; --k) {
            std::uint64_t raw = mix64(key + kGolden * (static_cast<std::uint64_t>(cfg.n - k) + 1));
            double tau = -2.0 * std::log(uniform_open(raw)) /
                         (static_cast<double>(k) * (k - 1));
            t += tau;
            l += k * tau;
        }
        switch (cfg.statistic) {
            case Statistic::AbsorptionTime: out[r] = t; break;
            case Statistic::TreeLength: out[r] = l; break;
            case Statistic::ShiftedTreeLength: out[r] = 0.5 * l - logn; break;
        }
    }
    return out;
}

SampleSummary::SampleSummary(std::vector<double> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    recompute();
}

void SampleSummary::recompute() {
    mean_ = 0.0;
    for (int p = 2; p <= 6; ++p) central_[p] = 0.0;
    if (values_.empty()) return;
    std::size_t m = values_.size();
    mean_ = pairwise_accumulate(values_, 0, m, [](double x) { return x; }) / static_cast<double>(m);
    double mu = mean_;
    for (int p = 2; p <= 6; ++p) {
        central_[p] = pairwise_accumulate(values_, 0, m, [mu, p](double x) {
                          return std::pow(x - mu, p);
                      }) /
                      static_cast<double>(m);
    }
}

double SampleSummary::variance() const {
    if (values_.size() < 2) return 0.0;
    double m = static_cast<double>(values_.size());
    double v = central_[2] * m / (m - 1.0);
    return v < 0.0 ? 0.0 : v;
}

double SampleSummary::central_moment(int order) const {
    if (order < 2 || order > 6) throw std::domain_error("central_moment: order must be in [2, 6]");
    return central_[order];
}

double SampleSummary::min() const {
    if (values_.empty()) throw std::domain_error("min: empty summary");
    return values_.front();
}

double SampleSummary::max() const {
    if (values_.empty()) throw std::domain_error("max: empty summary");
    return values_.back();
}

double SampleSummary::ecdf(double x) const {
    if (values_.empty()) throw std::domain_error("ecdf: empty summary");
    auto it = std::upper_bound(values_.begin(), values_.end(), x);
    return static_cast<double>(it - values_.begin()) / static_cast<double>(values_.size());
}

SampleSummary SampleSummary::merge(const SampleSummary& a, const SampleSummary& b) {
    SampleSummary out;
    out.values_.resize(a.values_.size() + b.values_.size());
    std::merge(a.values_.begin(), a.values_.end(), b.values_.begin(), b.values_.end(),
               out.values_.begin());
    out.recompute();
    return out;
}

SampleSummary sample(const SimConfig& cfg) { return SampleSummary(sample_values(cfg)); }

double ks_critical_scale(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("ks_critical_scale: need 0 < alpha < 1");
    return std::sqrt(-0.5 * std::log(alpha / 2.0));
}

KsResult ks_test(const std::vector<double>& sample, const std::function<double(double)>& cdf,
                 double alpha) {
    return ks_test(SampleSummary(sample), cdf, alpha);
}

KsResult ks_test(const SampleSummary& summary, const std::function<double(double)>& cdf,
                 double alpha) {
    if (summary.count() == 0) throw std::domain_error("ks_test: empty sample");
    const std::vector<double>& v = summary.sorted_values();
    double m = static_cast<double>(v.size());
    double d = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        double f = cdf(v[i]);
        d = std::max(d, f - static_cast<double>(i) / m);
        d = std::max(d, static_cast<double>(i + 1) / m - f);
    }
    KsResult res;
    res.statistic = d;
    res.critical = ks_critical_scale(alpha) / std::sqrt(m);
    res.pass = res.statistic < res.critical;
    return res;
}

KsResult ks_test_two_sample(const std::vector<double>& a, const std::vector<double>& b,
                            double alpha) {
    if (a.empty() || b.empty()) throw std::domain_error("ks_test_two_sample: empty sample");
    std::vector<double> sa = a;
    std::vector<double> sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    double na = static_cast<double>(sa.size());
    double nb = static_cast<double>(sb.size());
    double d = 0.0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < sa.size() && j < sb.size()) {
        double x = std::min(sa[i], sb[j]);
        while (i < sa.size() && sa[i] <= x) ++i;
        while (j < sb.size() && sb[j] <= x) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    KsResult res;
    res.statistic = d;
    res.critical = ks_critical_scale(alpha) * std::sqrt((na + nb) / (na * nb));
    res.pass = res.statistic < res.critical;
    return res;
}

void write_sample_csv(std::ostream& out, const SimConfig& cfg, const std::vector<double>& values) {
    out << "# statistic=" << statistic_name(cfg.statistic) << " seed=" << cfg.seed
        << " n=" << cfg.n << " reps=" << values.size() << "\n";
    out.precision(17);
    for (double v : values) out << v << "\n";
}

}  // namespace kingman
