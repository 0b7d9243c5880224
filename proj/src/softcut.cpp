#include "perrdi/softcut.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "perrdi/errors.hpp"
#include "perrdi/rng.hpp"

namespace perrdi {

namespace {

constexpr double kVolumeFloor = 1e-12;

std::vector<double> checked_degrees(const WeightedGraph& g) {
    auto deg = g.weighted_degrees();
    for (int v = 0; v < g.n; ++v)
        if (!(deg[static_cast<std::size_t>(v)] > 0.0))
            throw ContractError("node " + std::to_string(v) +
                                " has zero degree; the normalized cut is undefined");
    return deg;
}

}  // namespace

Matrix Matrix::zeros(int rows, int cols) {
    Matrix m;
    m.rows = rows;
    m.cols = cols;
    m.data.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0.0);
    return m;
}

void SoftAssignment::validate() const {
    if (y.rows < 1 || y.cols < 2)
        throw ContractError("soft assignment needs at least 1 node and 2 parts");
    if (y.data.size() != static_cast<std::size_t>(y.rows) * static_cast<std::size_t>(y.cols))
        throw ContractError("soft assignment storage size mismatch");
    for (int i = 0; i < y.rows; ++i) {
        double sum = 0.0;
        for (int c = 0; c < y.cols; ++c) {
            const double p = y.at(i, c);
            if (!(p >= 0.0 && p <= 1.0) || !std::isfinite(p))
                throw ContractError("soft assignment entry outside [0, 1] at row " +
                                    std::to_string(i));
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-9)
            throw ContractError("soft assignment row " + std::to_string(i) +
                                " sums to " + std::to_string(sum));
    }
}

SoftAssignment SoftAssignment::one_hot(const PartitionAssignment& pa) {
    pa.validate();
    SoftAssignment sa;
    sa.y = Matrix::zeros(static_cast<int>(pa.part.size()), pa.k);
    for (std::size_t i = 0; i < pa.part.size(); ++i)
        sa.y.at(static_cast<int>(i), pa.part[i]) = 1.0;
    return sa;
}

SoftAssignment row_softmax(const Matrix& logits) {
    SoftAssignment sa;
    sa.y = Matrix::zeros(logits.rows, logits.cols);
    for (int i = 0; i < logits.rows; ++i) {
        double hi = logits.at(i, 0);
        for (int c = 1; c < logits.cols; ++c) hi = std::max(hi, logits.at(i, c));
        double sum = 0.0;
        for (int c = 0; c < logits.cols; ++c) {
            const double e = std::exp(logits.at(i, c) - hi);
            sa.y.at(i, c) = e;
            sum += e;
        }
        for (int c = 0; c < logits.cols; ++c) sa.y.at(i, c) /= sum;
    }
    return sa;
}

void SoftcutConfig::validate() const {
    if (!(learning_rate > 0.0)) throw ContractError("learning rate must be positive");
    if (max_epochs < 1) throw ContractError("max_epochs must be at least 1");
    if (patience < 1) throw ContractError("patience must be at least 1");
    if (balance_weight < 0.0) throw ContractError("balance weight must be non-negative");
    if (init_scale < 0.0) throw ContractError("init scale must be non-negative");
}

namespace {

// Shared pieces of the loss and gradient: per-part expected volume Γ,
// cut numerator, soft part sizes, and A·Y.
struct LossParts {
    std::vector<double> gamma;  // Γ_k
    std::vector<double> numer;  // Σ_ij A_ij Y_ik (1 − Y_jk)
    std::vector<double> counts; // Σ_i Y_ik
    Matrix ay;                  // (A·Y)_ik
};

LossParts loss_parts(const WeightedGraph& g, const Matrix& y,
                     const std::vector<double>& deg) {
    const int k = y.cols;
    LossParts parts;
    parts.gamma.assign(static_cast<std::size_t>(k), 0.0);
    parts.numer.assign(static_cast<std::size_t>(k), 0.0);
    parts.counts.assign(static_cast<std::size_t>(k), 0.0);
    parts.ay = Matrix::zeros(y.rows, k);
    for (int i = 0; i < y.rows; ++i)
        for (int c = 0; c < k; ++c) {
            parts.gamma[static_cast<std::size_t>(c)] += deg[static_cast<std::size_t>(i)] * y.at(i, c);
            parts.counts[static_cast<std::size_t>(c)] += y.at(i, c);
        }
    for (const auto& e : g.edges)
        for (int c = 0; c < k; ++c) {
            const double yu = y.at(e.u, c), yv = y.at(e.v, c);
            // each unordered edge covers both ordered pairs of A_ij Y_ik (1-Y_jk)
            parts.numer[static_cast<std::size_t>(c)] += e.w * (yu + yv - 2.0 * yu * yv);
            parts.ay.at(e.u, c) += e.w * yv;
            parts.ay.at(e.v, c) += e.w * yu;
        }
    for (int c = 0; c < k; ++c)
        if (parts.gamma[static_cast<std::size_t>(c)] < kVolumeFloor)
            throw CollapsedPartitionError("part " + std::to_string(c) +
                                          " has collapsed (expected volume below 1e-12)");
    return parts;
}

double loss_from_parts(const LossParts& parts, int n, int k, double lambda) {
    double loss = 0.0;
    for (int c = 0; c < k; ++c)
        loss += parts.numer[static_cast<std::size_t>(c)] / parts.gamma[static_cast<std::size_t>(c)];
    if (lambda > 0.0) {
        const double target = static_cast<double>(n) / k;
        for (int c = 0; c < k; ++c) {
            const double dev = parts.counts[static_cast<std::size_t>(c)] - target;
            loss += lambda * dev * dev;
        }
    }
    return loss;
}

Matrix grad_from_parts(const Matrix& y, const std::vector<double>& deg,
                       const LossParts& parts, double lambda) {
    const int n = y.rows, k = y.cols;
    const double target = static_cast<double>(n) / k;

    // dL/dY first...
    Matrix gy = Matrix::zeros(n, k);
    for (int c = 0; c < k; ++c) {
        const double gamma = parts.gamma[static_cast<std::size_t>(c)];
        const double ratio = parts.numer[static_cast<std::size_t>(c)] / (gamma * gamma);
        const double bal =
            lambda > 0.0
                ? 2.0 * lambda * (parts.counts[static_cast<std::size_t>(c)] - target)
                : 0.0;
        for (int i = 0; i < n; ++i) {
            const double d = deg[static_cast<std::size_t>(i)];
            gy.at(i, c) = (d - 2.0 * parts.ay.at(i, c)) / gamma - ratio * d + bal;
        }
    }
    // ...then through the row-softmax: dZ_ic = Y_ic (G_ic − Σ_k G_ik Y_ik).
    Matrix gz = Matrix::zeros(n, k);
    for (int i = 0; i < n; ++i) {
        double dot = 0.0;
        for (int c = 0; c < k; ++c) dot += gy.at(i, c) * y.at(i, c);
        for (int c = 0; c < k; ++c) gz.at(i, c) = y.at(i, c) * (gy.at(i, c) - dot);
    }
    return gz;
}

}  // namespace

double soft_ncut_loss(const WeightedGraph& g, const SoftAssignment& Y,
                      double balance_weight) {
    Y.validate();
    if (Y.n() != g.n)
        throw ContractError("soft assignment covers " + std::to_string(Y.n()) +
                            " nodes, expected " + std::to_string(g.n));
    if (balance_weight < 0.0) throw ContractError("balance weight must be non-negative");
    const auto deg = checked_degrees(g);
    const auto parts = loss_parts(g, Y.y, deg);
    return loss_from_parts(parts, g.n, Y.k(), balance_weight);
}

Matrix soft_ncut_grad(const WeightedGraph& g, const Matrix& logits,
                      double balance_weight) {
    if (logits.rows != g.n)
        throw ContractError("logit matrix covers " + std::to_string(logits.rows) +
                            " nodes, expected " + std::to_string(g.n));
    if (logits.cols < 2) throw ContractError("need at least 2 parts");
    if (balance_weight < 0.0) throw ContractError("balance weight must be non-negative");
    const auto deg = checked_degrees(g);
    const auto y = row_softmax(logits);
    const auto parts = loss_parts(g, y.y, deg);
    return grad_from_parts(y.y, deg, parts, balance_weight);
}

SoftcutResult optimize_soft(const WeightedGraph& g, int k, const SoftcutConfig& cfg) {
    cfg.validate();
    if (k < 2) throw ContractError("need at least 2 parts");
    if (g.n < k) throw ContractError("need at least k nodes");
    const auto deg = checked_degrees(g);

    Rng rng(cfg.seed);
    Matrix z = Matrix::zeros(g.n, k);
    for (auto& v : z.data) v = rng.normal() * cfg.init_scale;

    SoftcutResult result;
    result.best_loss = std::numeric_limits<double>::infinity();
    Matrix best_z = z;
    int stall = 0;
    for (int epoch = 0; epoch < cfg.max_epochs; ++epoch) {
        const auto y = row_softmax(z);
        const auto parts = loss_parts(g, y.y, deg);
        const double loss = loss_from_parts(parts, g.n, k, cfg.balance_weight);
        if (!std::isfinite(loss))
            throw DivergenceError("loss became non-finite at epoch " +
                                  std::to_string(epoch));
        result.loss_history.push_back(loss);
        result.epochs_run = epoch + 1;
        if (loss < result.best_loss - 1e-9) {
            result.best_loss = loss;
            result.best_epoch = epoch;
            best_z = z;
            stall = 0;
        } else {
            stall++;
            if (stall >= cfg.patience) break;
        }
        const Matrix grad = grad_from_parts(y.y, deg, parts, cfg.balance_weight);
        for (std::size_t i = 0; i < z.data.size(); ++i)
            z.data[i] -= cfg.learning_rate * grad.data[i];
    }
    result.assignment = row_softmax(best_z);
    return result;
}

PartitionAssignment harden(const SoftAssignment& Y) {
    Y.validate();
    PartitionAssignment pa;
    pa.k = Y.k();
    pa.part.resize(static_cast<std::size_t>(Y.n()));
    for (int i = 0; i < Y.n(); ++i) {
        int best = 0;
        for (int c = 1; c < Y.k(); ++c)
            if (Y.y.at(i, c) > Y.y.at(i, best)) best = c;
        pa.part[static_cast<std::size_t>(i)] = best;
    }
    return pa;
}

}  // namespace perrdi
