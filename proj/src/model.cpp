#include "jointdyad/model.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace jointdyad {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_finite(double x, const char* name) {
    if (!std::isfinite(x)) throw std::invalid_argument(std::string(name) + " is not finite");
}

} // namespace

void ModelParams::validate() const {
    if (u.rows() != v.rows() || u.cols() != v.cols())
        throw std::invalid_argument("u and v dimensions differ");
    if (w.rows() != u.cols() || w.cols() != u.cols())
        throw std::invalid_argument("w must be K x K");
    if (!(eta > 0.0) || !std::isfinite(eta))
        throw std::invalid_argument("eta must be positive and finite");
    auto check_nonneg = [](const Matrix& m, const char* name) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const double x = m(i, j);
                if (!(x >= 0.0) || !std::isfinite(x))
                    throw std::invalid_argument(std::string(name) +
                                                " has a negative or non-finite entry");
            }
    };
    check_nonneg(u, "u");
    check_nonneg(v, "v");
    check_nonneg(w, "w");
    if (!node_labels.empty() && node_labels.size() != u.rows())
        throw std::invalid_argument("node_labels length does not match N");
}

double lambda_rate(const ModelParams& params, NodeId i, NodeId j) {
    const auto ui = params.u.row(static_cast<std::size_t>(i));
    const auto vj = params.v.row(static_cast<std::size_t>(j));
    const std::size_t k = params.u.cols();
    double total = 0.0;
    for (std::size_t a = 0; a < k; ++a) {
        double inner = 0.0;
        for (std::size_t b = 0; b < k; ++b) inner += vj[b] * params.w(a, b);
        total += ui[a] * inner;
    }
    return total;
}

Matrix lambda_row_cache(const ModelParams& params) {
    const std::size_t n = params.u.rows();
    const std::size_t k = params.u.cols();
    Matrix cache(n, k, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto ui = params.u.row(i);
        auto ci = cache.row(i);
        for (std::size_t a = 0; a < k; ++a) {
            const double uia = ui[a];
            if (uia == 0.0) continue;
            const auto wa = params.w.row(a);
            for (std::size_t b = 0; b < k; ++b) ci[b] += uia * wa[b];
        }
    }
    return cache;
}

double lambda_from_cache(const Matrix& cache, const Matrix& v, NodeId i, NodeId j) {
    const auto ci = cache.row(static_cast<std::size_t>(i));
    const auto vj = v.row(static_cast<std::size_t>(j));
    double total = 0.0;
    for (std::size_t b = 0; b < ci.size(); ++b) total += ci[b] * vj[b];
    return total;
}

DyadDistribution dyad_distribution(double lambda_ij, double lambda_ji, double eta) {
    require_finite(lambda_ij, "lambda_ij");
    require_finite(lambda_ji, "lambda_ji");
    require_finite(eta, "eta");
    if (lambda_ij < 0.0 || lambda_ji < 0.0) throw std::invalid_argument("negative rate");
    if (!(eta > 0.0)) throw std::invalid_argument("eta must be positive");

    const double t01 = lambda_ji;
    const double t10 = lambda_ij;
    const double t11 = eta * lambda_ij * lambda_ji;
    const double z = 1.0 + t01 + t10 + t11;
    if (std::isfinite(z))
        return {1.0 / z, t01 / z, t10 / z, t11 / z, z};

    // Normalizer overflowed: factor out the largest cell in log space.
    const double l00 = 0.0;
    const double l01 = std::log(lambda_ji);
    const double l10 = std::log(lambda_ij);
    const double l11 = std::log(eta) + std::log(lambda_ij) + std::log(lambda_ji);
    const double top = std::max(std::max(l00, l01), std::max(l10, l11));
    const double e00 = std::exp(l00 - top);
    const double e01 = std::exp(l01 - top);
    const double e10 = std::exp(l10 - top);
    const double e11 = std::exp(l11 - top);
    const double s = e00 + e01 + e10 + e11;
    return {e00 / s, e01 / s, e10 / s, e11 / s, kInf};
}

double marginal_mean(double lambda_ij, double lambda_ji, double eta) {
    const double t11 = eta * lambda_ij * lambda_ji;
    const double z = 1.0 + lambda_ij + lambda_ji + t11;
    const double value = (lambda_ij + t11) / z;
    if (std::isfinite(z)) return value;
    const DyadDistribution d = dyad_distribution(lambda_ij, lambda_ji, eta);
    return d.p10 + d.p11;
}

double conditional_mean(double lambda_ij, double eta, int a_ji) {
    if (a_ji != 0 && a_ji != 1) throw std::invalid_argument("a_ji must be 0 or 1");
    const double rate = a_ji ? eta * lambda_ij : lambda_ij;
    if (std::isinf(rate)) return 1.0;
    return rate / (rate + 1.0);
}

DyadMoments dyad_moments(double lambda_ij, double lambda_ji, double eta) {
    const DyadDistribution d = dyad_distribution(lambda_ij, lambda_ji, eta);
    DyadMoments m;
    m.mean_ij = d.p10 + d.p11;
    m.mean_ji = d.p01 + d.p11;
    if (std::isfinite(d.z)) {
        const double z2 = d.z * d.z;
        m.var_ij = (lambda_ij * (1.0 + eta * lambda_ji) / d.z) * ((1.0 + lambda_ji) / d.z);
        m.var_ji = (lambda_ji * (1.0 + eta * lambda_ij) / d.z) * ((1.0 + lambda_ij) / d.z);
        m.cov = (eta - 1.0) * lambda_ij * lambda_ji / z2;
    } else {
        m.var_ij = m.mean_ij * (1.0 - m.mean_ij);
        m.var_ji = m.mean_ji * (1.0 - m.mean_ji);
        m.cov = d.p11 - m.mean_ij * m.mean_ji;
    }
    return m;
}

double log_likelihood(const DirectedBinaryGraph& g, const ModelParams& params,
                      const TrainMask* mask) {
    params.validate();
    if (params.n_nodes() != g.n_nodes())
        throw std::invalid_argument("params and graph disagree on N");
    const NodeId n = g.n_nodes();
    const Matrix cache = lambda_row_cache(params);
    const double log_eta = std::log(params.eta);

    double total = 0.0;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            if (mask && mask->held_out(i, j)) continue;
            const double lab = lambda_from_cache(cache, params.v, i, j);
            const double lba = lambda_from_cache(cache, params.v, j, i);
            const bool aij = g.has_edge(i, j);
            const bool aji = g.has_edge(j, i);
            if (aij) {
                if (lab <= 0.0) return -kInf;
                total += std::log(lab);
            }
            if (aji) {
                if (lba <= 0.0) return -kInf;
                total += std::log(lba);
            }
            if (aij && aji) total += log_eta;
            total -= std::log(lab + lba + params.eta * lab * lba + 1.0);
        }
    }
    return total;
}

double eta_gradient(const DirectedBinaryGraph& g, const ModelParams& params) {
    params.validate();
    if (params.n_nodes() != g.n_nodes())
        throw std::invalid_argument("params and graph disagree on N");
    const NodeId n = g.n_nodes();
    const Matrix cache = lambda_row_cache(params);

    double mutual = 0.0;
    double expected = 0.0;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            const double lab = lambda_from_cache(cache, params.v, i, j);
            const double lba = lambda_from_cache(cache, params.v, j, i);
            expected += lab * lba / (lab + lba + params.eta * lab * lba + 1.0);
            if (g.has_edge(i, j) && g.has_edge(j, i)) mutual += 1.0;
        }
    }
    return mutual / params.eta - expected;
}

namespace {

nlohmann::ordered_json matrix_to_json(const Matrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const nlohmann::json& rows, std::size_t n, std::size_t k,
                        const char* name) {
    if (!rows.is_array() || rows.size() != n)
        throw std::invalid_argument(std::string(name) + " has wrong row count");
    Matrix m(n, k);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != k)
            throw std::invalid_argument(std::string(name) + " has a wrong-length row");
        for (std::size_t j = 0; j < k; ++j) m(i, j) = row[j].get<double>();
    }
    return m;
}

} // namespace

void save_params(const ModelParams& params, std::ostream& out) {
    nlohmann::ordered_json doc;
    doc["N"] = params.u.rows();
    doc["K"] = params.u.cols();
    doc["eta"] = params.eta;
    doc["u"] = matrix_to_json(params.u);
    doc["v"] = matrix_to_json(params.v);
    doc["w"] = matrix_to_json(params.w);
    doc["node_labels"] = params.node_labels;
    out << doc.dump(2) << '\n';
}

void save_params_file(const ModelParams& params, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write params: " + path);
    save_params(params, out);
}

ModelParams load_params(std::istream& in) {
    nlohmann::json doc = nlohmann::json::parse(in);
    const auto n = doc.at("N").get<std::size_t>();
    const auto k = doc.at("K").get<std::size_t>();
    ModelParams params;
    params.eta = doc.at("eta").get<double>();
    params.u = matrix_from_json(doc.at("u"), n, k, "u");
    params.v = matrix_from_json(doc.at("v"), n, k, "v");
    params.w = matrix_from_json(doc.at("w"), k, k, "w");
    if (doc.contains("node_labels"))
        params.node_labels = doc["node_labels"].get<std::vector<std::string>>();
    params.validate();
    return params;
}

ModelParams load_params_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open params: " + path);
    return load_params(in);
}

} // namespace jointdyad
