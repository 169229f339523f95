#include "reflcat/matrix.hpp"

#include "reflcat/errors.hpp"

namespace reflcat {

CycMatrix::CycMatrix(unsigned dim, unsigned conductor)
    : n_(dim), conductor_(conductor),
      a_(static_cast<std::size_t>(dim) * dim, CycloNum::rational(0, conductor)) {
    if (dim == 0) throw DomainError("matrix dimension must be >= 1");
}

CycMatrix::CycMatrix(unsigned dim, unsigned conductor, std::vector<CycloNum> entries)
    : n_(dim), conductor_(conductor), a_(std::move(entries)) {
    if (dim == 0) throw DomainError("matrix dimension must be >= 1");
    if (a_.size() != static_cast<std::size_t>(dim) * dim)
        throw DomainError("matrix entry count does not match dimension");
    for (auto& e : a_)
        if (e.conductor() != conductor) e = e.promoted(conductor);
}

CycMatrix CycMatrix::identity(unsigned dim, unsigned conductor) {
    CycMatrix m(dim, conductor);
    for (unsigned i = 0; i < dim; ++i) m.a_[i * dim + i] = CycloNum::rational(1, conductor);
    return m;
}

void CycMatrix::set(unsigned r, unsigned c, CycloNum v) {
    a_[r * n_ + c] = v.conductor() == conductor_ ? std::move(v) : v.promoted(conductor_);
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
    if (n_ != o.n_) throw DomainError("matrix dimension mismatch");
    CycMatrix out(n_, conductor_);
    for (unsigned i = 0; i < n_; ++i) {
        for (unsigned k = 0; k < n_; ++k) {
            const CycloNum& aik = a_[i * n_ + k];
            if (aik.is_zero()) continue;
            for (unsigned j = 0; j < n_; ++j) {
                const CycloNum& bkj = o.a_[k * n_ + j];
                if (bkj.is_zero()) continue;
                out.a_[i * n_ + j] += aik * bkj;
            }
        }
    }
    return out;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
    if (n_ != o.n_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

CycloNum CycMatrix::trace() const {
    CycloNum t = CycloNum::rational(0, conductor_);
    for (unsigned i = 0; i < n_; ++i) t += a_[i * n_ + i];
    return t;
}

CycloNum CycMatrix::det() const {
    // Gaussian elimination with exact field arithmetic.
    std::vector<CycloNum> w = a_;
    CycloNum det = CycloNum::rational(1, conductor_);
    for (unsigned col = 0, row = 0; col < n_ && row < n_; ++col, ++row) {
        unsigned pivot = row;
        while (pivot < n_ && w[pivot * n_ + col].is_zero()) ++pivot;
        if (pivot == n_) return CycloNum::rational(0, conductor_);
        if (pivot != row) {
            for (unsigned j = 0; j < n_; ++j) std::swap(w[pivot * n_ + j], w[row * n_ + j]);
            det = -det;
        }
        const CycloNum p = w[row * n_ + col];
        det *= p;
        const CycloNum pinv = p.inverse();
        for (unsigned r = row + 1; r < n_; ++r) {
            const CycloNum f = w[r * n_ + col] * pinv;
            if (f.is_zero()) continue;
            for (unsigned j = col; j < n_; ++j) w[r * n_ + j] -= f * w[row * n_ + j];
        }
    }
    return det;
}

CycMatrix CycMatrix::inverse() const {
    // Gauss-Jordan on [A | I].
    std::vector<CycloNum> w = a_;
    CycMatrix inv = identity(n_, conductor_);
    for (unsigned col = 0; col < n_; ++col) {
        unsigned pivot = col;
        while (pivot < n_ && w[pivot * n_ + col].is_zero()) ++pivot;
        if (pivot == n_) throw DomainError("matrix is singular");
        if (pivot != col) {
            for (unsigned j = 0; j < n_; ++j) {
                std::swap(w[pivot * n_ + j], w[col * n_ + j]);
                std::swap(inv.a_[pivot * n_ + j], inv.a_[col * n_ + j]);
            }
        }
        const CycloNum pinv = w[col * n_ + col].inverse();
        for (unsigned j = 0; j < n_; ++j) {
            w[col * n_ + j] *= pinv;
            inv.a_[col * n_ + j] *= pinv;
        }
        for (unsigned r = 0; r < n_; ++r) {
            if (r == col) continue;
            const CycloNum f = w[r * n_ + col];
            if (f.is_zero()) continue;
            for (unsigned j = 0; j < n_; ++j) {
                w[r * n_ + j] -= f * w[col * n_ + j];
                inv.a_[r * n_ + j] -= f * inv.a_[col * n_ + j];
            }
        }
    }
    return inv;
}

namespace {

// Row echelon pass over a copy of (M - I); returns the eliminated rows.
std::vector<CycloNum> minus_identity_echelon(const CycMatrix& m, unsigned& rank_out) {
    const unsigned n = m.dim();
    std::vector<CycloNum> w;
    w.reserve(static_cast<std::size_t>(n) * n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            CycloNum e = m.at(i, j);
            if (i == j) e -= CycloNum::rational(1, m.conductor());
            w.push_back(std::move(e));
        }
    unsigned rank = 0;
    for (unsigned col = 0; col < n && rank < n; ++col) {
        unsigned pivot = rank;
        while (pivot < n && w[pivot * n + col].is_zero()) ++pivot;
        if (pivot == n) continue;
        if (pivot != rank)
            for (unsigned j = 0; j < n; ++j) std::swap(w[pivot * n + j], w[rank * n + j]);
        const CycloNum pinv = w[rank * n + col].inverse();
        for (unsigned j = col; j < n; ++j) w[rank * n + j] *= pinv;
        for (unsigned r = 0; r < n; ++r) {
            if (r == rank) continue;
            const CycloNum f = w[r * n + col];
            if (f.is_zero()) continue;
            for (unsigned j = col; j < n; ++j) w[r * n + j] -= f * w[rank * n + j];
        }
        ++rank;
    }
    rank_out = rank;
    return w;
}

} // namespace

unsigned CycMatrix::rank_minus_identity() const {
    unsigned rank = 0;
    minus_identity_echelon(*this, rank);
    return rank;
}

std::vector<CycloNum> CycMatrix::hyperplane_normal() const {
    unsigned rank = 0;
    std::vector<CycloNum> w = minus_identity_echelon(*this, rank);
    if (rank != 1)
        throw DomainError("hyperplane_normal requires rank(M - I) == 1, got rank " +
                          std::to_string(rank));
    return std::vector<CycloNum>(w.begin(), w.begin() + n_);
}

std::vector<CycloNum> CycMatrix::row_times(const std::vector<CycloNum>& row, const CycMatrix& m) {
    const unsigned n = m.dim();
    std::vector<CycloNum> out(n, CycloNum::rational(0, m.conductor()));
    for (unsigned i = 0; i < n; ++i) {
        if (row[i].is_zero()) continue;
        for (unsigned j = 0; j < n; ++j) {
            if (m.at(i, j).is_zero()) continue;
            out[j] += row[i] * m.at(i, j);
        }
    }
    return out;
}

std::string CycMatrix::key() const {
    std::string s;
    s.reserve(a_.size() * 8);
    for (const auto& e : a_) {
        s += e.key();
        s += ';';
    }
    return s;
}

std::string normalized_row_key(std::vector<CycloNum> row) {
    std::size_t lead = row.size();
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (!row[i].is_zero()) {
            lead = i;
            break;
        }
    }
    if (lead == row.size()) throw DomainError("cannot normalize a zero covector");
    const CycloNum inv = row[lead].inverse();
    std::string s;
    for (auto& e : row) {
        e *= inv;
        s += e.key();
        s += ';';
    }
    return s;
}

} // namespace reflcat
