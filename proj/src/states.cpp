// Copyright 2026 The mzphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mzphase/states.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mzphase {

PureState::PureState(HilbertSpace space, Vector amplitudes)
    : space_(std::move(space)), amp_(std::move(amplitudes)) {
    if (amp_.size() != space_.total_dim()) {
        throw std::invalid_argument("PureState: amplitude length does not match space dimension");
    }
    double norm2 = amp_.squaredNorm();
    if (std::abs(norm2 - 1.0) > kStructuralTol) {
        std::ostringstream os;
        os << "PureState: squared norm deviates from 1 by " << std::abs(norm2 - 1.0);
        throw std::invalid_argument(os.str());
    }
}

DensityOperator DensityOperator::create(HilbertSpace space, Matrix m) {
    if (m.rows() != m.cols() || m.rows() != space.total_dim()) {
        throw std::invalid_argument("DensityOperator: matrix shape does not match space");
    }
    DensityOperator rho(std::move(space), std::move(m));
    DensityDiagnostics d = rho.diagnostics();
    if (!d.ok()) {
        std::ostringstream os;
        os << "DensityOperator: invariant violation (hermiticity defect " << d.hermiticity_defect
           << ", trace defect " << d.trace_defect << ", min eigenvalue " << d.min_eigenvalue
           << ")";
        throw std::invalid_argument(os.str());
    }
    return rho;
}

DensityOperator DensityOperator::from_pure(const PureState &psi) {
    Matrix m = psi.amplitudes() * psi.amplitudes().adjoint();
    return DensityOperator(psi.space(), std::move(m));
}

DensityDiagnostics DensityOperator::diagnostics() const {
    DensityDiagnostics d;
    d.hermiticity_defect = hermiticity_defect(mat_);
    d.trace_defect = std::abs(mat_.trace() - cplx(1.0, 0.0));
    Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (mat_ + mat_.adjoint()),
                                                 Eigen::EigenvaluesOnly);
    d.min_eigenvalue = solver.eigenvalues().minCoeff();
    return d;
}

double DensityOperator::purity() const { return (mat_ * mat_).trace().real(); }

PureState tensor_product(const PureState &a, const PureState &b) {
    return PureState(a.space().tensor(b.space()), kron(a.amplitudes(), b.amplitudes()));
}

DensityOperator tensor_product(const DensityOperator &a, const DensityOperator &b) {
    return DensityOperator::create(a.space().tensor(b.space()), kron(a.matrix(), b.matrix()));
}

DensityOperator apply_unitary(const DensityOperator &rho, const Matrix &u) {
    if (u.rows() != rho.dim() || u.cols() != rho.dim()) {
        throw std::invalid_argument("apply_unitary: dimension mismatch");
    }
    double defect = unitarity_defect(u);
    if (defect > kStructuralTol) {
        std::ostringstream os;
        os << "apply_unitary: operator is not unitary, max|U^dagger U - I| = " << defect;
        throw std::invalid_argument(os.str());
    }
    return DensityOperator::create(rho.space(), u * rho.matrix() * u.adjoint());
}

DensityOperator partial_trace(const DensityOperator &rho,
                              const std::vector<std::string> &keep_labels) {
    const HilbertSpace &space = rho.space();
    const int n = space.factor_count();
    std::vector<int> keep_pos;
    keep_pos.reserve(keep_labels.size());
    for (const auto &label : keep_labels) {
        keep_pos.push_back(space.position_of(label));
    }
    std::vector<bool> kept(n, false);
    std::vector<Factor> out_factors;
    for (int pos : keep_pos) {
        if (kept[pos]) {
            throw std::invalid_argument("partial_trace: repeated label");
        }
        kept[pos] = true;
        out_factors.push_back(space.factors()[pos]);
    }
    std::vector<int> traced_pos;
    for (int i = 0; i < n; ++i) {
        if (!kept[i]) {
            traced_pos.push_back(i);
        }
    }
    HilbertSpace out_space(out_factors);
    const int out_dim = out_space.total_dim();
    int traced_dim = 1;
    for (int pos : traced_pos) {
        traced_dim *= space.factors()[pos].dim;
    }

    Matrix out = Matrix::Zero(out_dim, out_dim);
    std::vector<int> multi_row(n), multi_col(n);
    std::vector<int> keep_row(keep_pos.size()), keep_col(keep_pos.size());
    for (int a = 0; a < out_dim; ++a) {
        std::vector<int> am = out_space.multi_index(a);
        for (int b = 0; b < out_dim; ++b) {
            std::vector<int> bm = out_space.multi_index(b);
            cplx sum = 0.0;
            for (int t = 0; t < traced_dim; ++t) {
                int rem = t;
                for (int i = static_cast<int>(traced_pos.size()) - 1; i >= 0; --i) {
                    int d = space.factors()[traced_pos[i]].dim;
                    multi_row[traced_pos[i]] = rem % d;
                    multi_col[traced_pos[i]] = rem % d;
                    rem /= d;
                }
                for (size_t k = 0; k < keep_pos.size(); ++k) {
                    multi_row[keep_pos[k]] = am[k];
                    multi_col[keep_pos[k]] = bm[k];
                }
                sum += rho.matrix()(space.flat_index(multi_row), space.flat_index(multi_col));
            }
            out(a, b) = sum;
        }
    }
    return DensityOperator::create(std::move(out_space), std::move(out));
}

}  // namespace mzphase
