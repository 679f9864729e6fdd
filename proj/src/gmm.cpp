// SPDX-License-Identifier: Apache-2.0
//
// chanprobe: toolkit for probing generative wireless channel models

#include "chanprobe/gmm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "chanprobe/errors.hpp"
#include "chanprobe/linalg.hpp"
#include "chanprobe/parallel.hpp"

namespace chanprobe::genmod {

namespace {

constexpr double kLogPi = 1.1447298858494001741434273513531;
constexpr std::int64_t kEStepBlock = 4096;

struct WeightedMoments {
    double total = 0.0;
    Eigen::VectorXcd mean;
    Eigen::MatrixXcd covariance;
};

// mean = sum w_i x_i / W, cov = sum w_i (x_i - mean)(x_i - mean)^H / W.
// fit_scov and the EM M-step share this path.
WeightedMoments weighted_moments(const Eigen::MatrixXcd& samples, const Eigen::VectorXd& w) {
    WeightedMoments out;
    out.total = w.sum();
    if (!(out.total > 0.0)) {
        out.mean = Eigen::VectorXcd::Zero(samples.rows());
        out.covariance = Eigen::MatrixXcd::Zero(samples.rows(), samples.rows());
        return out;
    }
    const Eigen::VectorXcd wc = w.cast<std::complex<double>>();
    out.mean = (samples * wc) / out.total;

    Eigen::MatrixXcd centered = samples.colwise() - out.mean;
    const Eigen::VectorXd ws = w.cwiseSqrt();
    for (Eigen::Index i = 0; i < centered.cols(); ++i) centered.col(i) *= ws[i];

    Eigen::MatrixXcd cov = Eigen::MatrixXcd::Zero(samples.rows(), samples.rows());
    cov.selfadjointView<Eigen::Lower>().rankUpdate(centered, 1.0 / out.total);
    out.covariance = cov.selfadjointView<Eigen::Lower>();
    return out;
}

struct ComponentFactor {
    Eigen::MatrixXcd lower;
    double log_norm = 0.0;  // -N log(pi) - log det(C)
};

ComponentFactor factor_component(const Eigen::MatrixXcd& cov, double extra_diag,
                                 const std::string& name) {
    ComponentFactor f;
    f.lower = cholesky_psd(cov, extra_diag, name);
    double log_det = 0.0;
    for (Eigen::Index i = 0; i < f.lower.rows(); ++i) {
        const double d = f.lower(i, i).real();
        if (!(d > 0.0)) throw NotPositiveSemidefinite(name + ": singular covariance");
        log_det += 2.0 * std::log(d);
    }
    f.log_norm = -static_cast<double>(cov.rows()) * kLogPi - log_det;
    return f;
}

// Fills logw(k, i) = log pi_k + log N_C(x_i; mu_k, C_k) for a column block.
void log_density_block(const Eigen::MatrixXcd& samples, std::int64_t begin, std::int64_t end,
                       const Eigen::MatrixXcd& means, const Eigen::VectorXd& log_weights,
                       const std::vector<ComponentFactor>& factors, Eigen::MatrixXd& logw) {
    const auto cols = end - begin;
    const int k_total = static_cast<int>(means.cols());
    Eigen::MatrixXcd work(samples.rows(), cols);
    for (int k = 0; k < k_total; ++k) {
        work = samples.middleCols(begin, cols).colwise() - means.col(k);
        factors[k].lower.triangularView<Eigen::Lower>().solveInPlace(work);
        logw.block(k, begin, 1, cols) =
            (-work.colwise().squaredNorm()).array() + factors[k].log_norm + log_weights[k];
    }
}

// In-place softmax over rows per column; returns per-column log-sum-exp.
void normalize_log_columns(Eigen::MatrixXd& logw, std::int64_t begin, std::int64_t end,
                           Eigen::VectorXd& col_lse) {
    for (std::int64_t i = begin; i < end; ++i) {
        auto col = logw.col(i);
        const double m = col.maxCoeff();
        if (!std::isfinite(m)) {
            col_lse[i] = -std::numeric_limits<double>::infinity();
            continue;
        }
        const double s = (col.array() - m).exp().sum();
        const double lse = m + std::log(s);
        col = (col.array() - lse).exp();
        col /= col.sum();  // exact unit sum
        col_lse[i] = lse;
    }
}

Eigen::MatrixXcd kmeans_pp_seed(const Eigen::MatrixXcd& samples, int k, Eigen::Index subset_max,
                                RngSequence& rng) {
    const Eigen::Index m = samples.cols();
    const Eigen::Index stride = std::max<Eigen::Index>(1, m / std::max<Eigen::Index>(1, subset_max));
    std::vector<Eigen::Index> idx;
    for (Eigen::Index i = 0; i < m; i += stride) idx.push_back(i);
    const Eigen::Index s = static_cast<Eigen::Index>(idx.size());

    Eigen::MatrixXcd centers(samples.rows(), k);
    centers.col(0) = samples.col(idx[rng.next_below(static_cast<std::uint64_t>(s))]);

    Eigen::VectorXd d2(s);
    for (Eigen::Index i = 0; i < s; ++i)
        d2[i] = (samples.col(idx[i]) - centers.col(0)).squaredNorm();

    for (int c = 1; c < k; ++c) {
        const double total = d2.sum();
        Eigen::Index chosen = s - 1;
        if (total > 0.0) {
            double u = rng.next_double() * total;
            for (Eigen::Index i = 0; i < s; ++i) {
                u -= d2[i];
                if (u <= 0.0) {
                    chosen = i;
                    break;
                }
            }
        } else {
            chosen = static_cast<Eigen::Index>(rng.next_below(static_cast<std::uint64_t>(s)));
        }
        centers.col(c) = samples.col(idx[chosen]);
        for (Eigen::Index i = 0; i < s; ++i)
            d2[i] = std::min(d2[i], (samples.col(idx[i]) - centers.col(c)).squaredNorm());
    }
    return centers;
}

}  // namespace

void GmmModel::validate() const {
    const int k = n_components();
    if (k < 1) throw InvalidArgument("GMM must have K >= 1 components");
    if (means.cols() != k || static_cast<int>(covariances.size()) != k)
        throw InvalidArgument("GMM parameter arrays disagree on K");
    if (std::abs(weights.sum() - 1.0) > 1e-12)
        throw InvalidArgument("GMM weights must sum to 1 within 1e-12");
    if ((weights.array() < 0.0).any()) throw InvalidArgument("GMM weights must be >= 0");
    for (const auto& c : covariances) {
        if (c.rows() != dim() || c.cols() != dim())
            throw InvalidArgument("GMM covariance dimension mismatch");
        if (hermitian_asymmetry(c) > 1e-10)
            throw InvalidArgument("GMM covariance is not Hermitian within 1e-10");
    }
}

ScovModel fit_scov(const ChannelDataset& ds) {
    if (ds.n_samples() < 2) throw InsufficientData("fit_scov requires at least 2 samples");
    const auto mom = weighted_moments(ds.samples, Eigen::VectorXd::Ones(ds.n_samples()));
    return ScovModel{mom.mean, mom.covariance};
}

GmmModel gmm_from_scov(const ScovModel& scov) {
    GmmModel model;
    model.weights = Eigen::VectorXd::Ones(1);
    model.means = scov.mean;
    model.covariances = {scov.covariance};
    return model;
}

GmmDensity::GmmDensity(const GmmModel& model, double extra_diag) : model_(model) {
    const int k = model.n_components();
    lowers_.reserve(k);
    log_norms_.reserve(k);
    for (int i = 0; i < k; ++i) {
        auto f = factor_component(model.covariances[i], extra_diag,
                                  "GMM component " + std::to_string(i));
        lowers_.push_back(std::move(f.lower));
        log_norms_.push_back(f.log_norm);
    }
}

Eigen::MatrixXd GmmDensity::weighted_log_densities(const Eigen::MatrixXcd& samples) const {
    if (samples.rows() != model_.dim())
        throw InvalidArgument("sample dimension does not match the model");
    const int k = model_.n_components();
    const Eigen::VectorXd logw_prior =
        model_.weights.array().max(1e-300).log().matrix();

    std::vector<ComponentFactor> factors(k);
    for (int i = 0; i < k; ++i) factors[i] = {lowers_[i], log_norms_[i]};

    Eigen::MatrixXd logw(k, samples.cols());
    parallel_blocks(samples.cols(), kEStepBlock,
                    [&](std::size_t, std::int64_t begin, std::int64_t end) {
                        log_density_block(samples, begin, end, model_.means, logw_prior, factors,
                                          logw);
                    });
    // components with exactly zero weight contribute nothing
    for (int i = 0; i < k; ++i)
        if (model_.weights[i] <= 0.0)
            logw.row(i).setConstant(-std::numeric_limits<double>::infinity());
    return logw;
}

Eigen::VectorXd gmm_responsibility(const GmmModel& model, const ChannelVector& h) {
    if (h.size() != model.dim())
        throw InvalidArgument("gmm_responsibility: dimension mismatch");
    GmmDensity density(model);
    Eigen::MatrixXd logw = density.weighted_log_densities(h);
    Eigen::VectorXd lse(1);
    normalize_log_columns(logw, 0, 1, lse);
    if (!std::isfinite(lse[0]))
        throw NumericFailure("gmm_responsibility: all component densities underflow for sample 0");
    return logw.col(0);
}

double gmm_mean_log_likelihood(const GmmModel& model, const ChannelDataset& ds) {
    GmmDensity density(model);
    Eigen::MatrixXd logw = density.weighted_log_densities(ds.samples);
    Eigen::VectorXd lse(ds.n_samples());
    normalize_log_columns(logw, 0, ds.n_samples(), lse);
    return lse.mean();
}

GmmModel fit_gmm(const ChannelDataset& ds, int k, const EmOptions& opts, RngStream rng) {
    if (k < 1) throw InvalidArgument("fit_gmm: k must be >= 1");
    const Eigen::Index m = ds.n_samples();
    if (m < 2 * static_cast<Eigen::Index>(k))
        throw InsufficientData("fit_gmm: need at least 2K samples, got " + std::to_string(m));
    if (opts.max_iter < 1) throw InvalidArgument("fit_gmm: max_iter must be >= 1");

    const ScovModel scov = fit_scov(ds);
    const Eigen::MatrixXcd& x = ds.samples;

    GmmModel model;
    model.weights = Eigen::VectorXd::Constant(k, 1.0 / k);
    {
        RngSequence seq(rng);
        model.means = kmeans_pp_seed(x, k, opts.kmeans_subset, seq);
    }
    model.covariances.assign(k, scov.covariance);

    std::vector<ComponentFactor> factors(k);
    auto rebuild_factor = [&](int ki) {
        factors[ki] = factor_component(model.covariances[ki], 0.0,
                                       "GMM component " + std::to_string(ki));
    };
    for (int ki = 0; ki < k; ++ki) rebuild_factor(ki);

    Eigen::MatrixXd resp(k, m);       // log-densities, then responsibilities
    Eigen::VectorXd sample_ll(m);
    std::vector<int> reseeds(k, 0);
    double prev_ll = std::numeric_limits<double>::quiet_NaN();

    for (int iter = 0; iter < opts.max_iter; ++iter) {
        // E-step
        const Eigen::VectorXd log_weights = model.weights.array().max(1e-300).log().matrix();
        parallel_blocks(m, kEStepBlock, [&](std::size_t, std::int64_t begin, std::int64_t end) {
            log_density_block(x, begin, end, model.means, log_weights, factors, resp);
            normalize_log_columns(resp, begin, end, sample_ll);
        });

        const double ll = sample_ll.mean();
        if (!std::isfinite(ll))
            throw NumericFailure("fit_gmm: non-finite log-likelihood at iteration " +
                                 std::to_string(iter));
        model.fit_log.push_back(ll);

        if (iter > 0) {
            const double denom = std::max(std::abs(ll), 1e-300);
            if (std::abs(ll - prev_ll) / denom < opts.tol) break;
        }
        prev_ll = ll;
        if (iter + 1 == opts.max_iter) break;

        // M-step
        parallel_blocks(k, 1, [&](std::size_t, std::int64_t kb, std::int64_t) {
            const int ki = static_cast<int>(kb);
            const auto mom = weighted_moments(x, resp.row(ki).transpose());
            model.weights[ki] = mom.total / static_cast<double>(m);
            if (mom.total > 0.0) {
                model.means.col(ki) = mom.mean;
                model.covariances[ki] = mom.covariance;
            }
        });

        // collapsed-component policy: re-seed at the lowest-likelihood sample,
        // at most 3 times, then freeze at scov statistics
        bool weights_dirty = false;
        for (int ki = 0; ki < k; ++ki) {
            bool collapsed = model.weights[ki] < 1e-6;
            if (!collapsed) {
                try {
                    rebuild_factor(ki);
                } catch (const NotPositiveSemidefinite&) {
                    collapsed = true;
                }
            }
            if (!collapsed) continue;
            weights_dirty = true;
            if (reseeds[ki] < 3) {
                ++reseeds[ki];
                Eigen::Index worst;
                sample_ll.minCoeff(&worst);
                model.means.col(ki) = x.col(worst);
            } else {
                model.means.col(ki) = scov.mean;
            }
            model.covariances[ki] = scov.covariance;
            model.weights[ki] = 0.5 / k;
            rebuild_factor(ki);
        }
        if (weights_dirty) model.weights /= model.weights.sum();
    }

    model.validate();
    return model;
}

ChannelDataset sample_gmm(const GmmModel& model, Eigen::Index m, RngStream rng) {
    if (m < 1) throw InvalidArgument("sample_gmm: m must be >= 1");
    model.validate();
    const Eigen::Index n = model.dim();
    const int k = model.n_components();

    std::vector<Eigen::MatrixXcd> lowers(k);
    for (int ki = 0; ki < k; ++ki)
        lowers[ki] =
            cholesky_psd(model.covariances[ki], 0.0, "GMM component " + std::to_string(ki));

    Eigen::VectorXd cumulative(k);
    double acc = 0.0;
    for (int ki = 0; ki < k; ++ki) cumulative[ki] = (acc += model.weights[ki]);

    ChannelDataset ds;
    ds.samples.resize(n, m);
    ds.norm_target = static_cast<double>(n);

    parallel_blocks(m, 2048, [&](std::size_t, std::int64_t begin, std::int64_t end) {
        for (std::int64_t i = begin; i < end; ++i) {
            RngSequence seq(rng.substream(static_cast<std::uint64_t>(i)));
            const double u = seq.next_double();
            int ki = 0;
            while (ki + 1 < k && u > cumulative[ki]) ++ki;
            const ChannelVector eps = sample_complex_standard_normal(seq, n);
            ds.samples.col(i) = model.means.col(ki) + lowers[ki] * eps;
        }
    });

    ds.meta.seed = rng.seed;
    ds.meta.generator_id = "gmm-k" + std::to_string(k);
    return ds;
}

}  // namespace chanprobe::genmod
