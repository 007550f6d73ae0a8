#include "leibniz/linalg.hpp"

#include <sstream>
#include <utility>

#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

void require_same(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw DimensionMismatch(std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
}

void require_field(Field a, Field b) {
    if (a != b) throw MixedFieldError();
}

}  // namespace

// ------------------------------------------------------------------ Vector

Vector::Vector(std::size_t n, Field field) : field_(field), e_(n, Scalar::zero(field)) {}

Vector::Vector(std::vector<Scalar> entries) : e_(std::move(entries)) {
    if (!e_.empty()) field_ = e_.front().field();
    for (const auto& s : e_) require_field(s.field(), field_);
}

Vector Vector::basis(std::size_t n, std::size_t index, Field field) {
    Vector v(n, field);
    v.e_.at(index) = Scalar::one(field);
    return v;
}

Vector Vector::from_ints(std::initializer_list<long> values, Field field) {
    Vector v(values.size(), field);
    std::size_t i = 0;
    for (long x : values) v.e_[i++] = Scalar::from_int(x, field);
    return v;
}

bool Vector::is_zero() const noexcept {
    for (const auto& s : e_)
        if (!s.is_zero()) return false;
    return true;
}

Vector& Vector::operator+=(const Vector& o) {
    require_same(size(), o.size(), "vector add");
    require_field(field_, o.field_);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& o) {
    require_same(size(), o.size(), "vector sub");
    require_field(field_, o.field_);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

Vector operator*(const Scalar& k, const Vector& v) {
    require_field(k.field(), v.field_);
    Vector r = v;
    for (auto& s : r.e_) s = k * s;
    return r;
}

Vector Vector::operator-() const {
    Vector r = *this;
    for (auto& s : r.e_) s = -s;
    return r;
}

std::string Vector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < e_.size(); ++i) os << (i ? ", " : "") << e_[i].to_string();
    os << ')';
    return os.str();
}

// ------------------------------------------------------------------ Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), d_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(std::size_t n, Field field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols, Field field) {
    Matrix m(rows.size(), cols, field);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require_same(rows[r].size(), cols, "matrix row length");
        require_field(rows[r].field(), field);
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows, Field field) {
    Matrix m(rows, cols.size(), field);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        require_same(cols[c].size(), rows, "matrix column length");
        require_field(cols[c].field(), field);
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Matrix Matrix::from_ints(std::initializer_list<std::initializer_list<long>> rows, Field field) {
    const std::size_t cols = rows.size() ? rows.begin()->size() : 0;
    Matrix m(rows.size(), cols, field);
    std::size_t r = 0;
    for (const auto& row : rows) {
        require_same(row.size(), cols, "matrix row length");
        std::size_t c = 0;
        for (long v : row) m(r, c++) = Scalar::from_int(v, field);
        ++r;
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    Vector v(cols_, field_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
    return v;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const noexcept {
    for (const auto& s : d_)
        if (!s.is_zero()) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same(a.cols_, b.rows_, "matrix product");
    require_field(a.field_, b.field_);
    Matrix m(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
        }
    return m;
}

Vector operator*(const Matrix& a, const Vector& v) {
    require_same(a.cols_, v.size(), "matrix-vector product");
    require_field(a.field_, v.field());
    Vector out(a.rows_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same(a.rows_, b.rows_, "matrix add rows");
    require_same(a.cols_, b.cols_, "matrix add cols");
    Matrix m = a;
    for (std::size_t i = 0; i < m.d_.size(); ++i) m.d_[i] += b.d_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same(a.rows_, b.rows_, "matrix sub rows");
    require_same(a.cols_, b.cols_, "matrix sub cols");
    Matrix m = a;
    for (std::size_t i = 0; i < m.d_.size(); ++i) m.d_[i] -= b.d_[i];
    return m;
}

// -------------------------------------------------------------------- RREF

namespace {

// In-place Gauss-Jordan; returns pivot columns.
std::vector<std::size_t> reduce(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
        std::size_t pr = lead_row;
        while (pr < m.rows() && m(pr, col).is_zero()) ++pr;
        if (pr == m.rows()) continue;
        if (pr != lead_row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pr, c), m(lead_row, c));
        const Scalar inv = Scalar::one(m.field()) / m(lead_row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(lead_row, c) = m(lead_row, c) * inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, col).is_zero()) continue;
            const Scalar k = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(lead_row, c).is_zero()) m(r, c) -= k * m(lead_row, c);
        }
        pivots.push_back(col);
        ++lead_row;
    }
    return pivots;
}

}  // namespace

Matrix rref(const Matrix& m) {
    Matrix r = m;
    reduce(r);
    return r;
}

std::size_t rank(const Matrix& m) {
    Matrix r = m;
    return reduce(r).size();
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw SingularMatrix();
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n, m.field());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar::one(m.field());
    }
    auto piv = reduce(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw SingularMatrix();
    Matrix inv(n, n, m.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::zero(std::size_t ambient, Field field) {
    Subspace s;
    s.ambient_ = ambient;
    s.field_ = field;
    return s;
}

Subspace Subspace::full(std::size_t ambient, Field field) {
    Subspace s = zero(ambient, field);
    for (std::size_t i = 0; i < ambient; ++i) s.basis_.push_back(Vector::basis(ambient, i, field));
    return s;
}

Subspace Subspace::span(std::span<const Vector> vectors, std::size_t ambient, Field field) {
    for (const auto& v : vectors) {
        require_same(v.size(), ambient, "span vector length");
        require_field(v.field(), field);
    }
    Matrix m(vectors.size(), ambient, field);
    for (std::size_t r = 0; r < vectors.size(); ++r)
        for (std::size_t c = 0; c < ambient; ++c) m(r, c) = vectors[r][c];
    const auto piv = reduce(m);
    Subspace s = zero(ambient, field);
    for (std::size_t r = 0; r < piv.size(); ++r) s.basis_.push_back(m.row(r));
    return s;
}

Subspace Subspace::span(std::initializer_list<Vector> vectors, std::size_t ambient, Field field) {
    return span(std::span<const Vector>(vectors.begin(), vectors.size()), ambient, field);
}

std::vector<std::size_t> Subspace::pivots() const {
    std::vector<std::size_t> p;
    for (const auto& b : basis_)
        for (std::size_t c = 0; c < ambient_; ++c)
            if (!b[c].is_zero()) {
                p.push_back(c);
                break;
            }
    return p;
}

bool Subspace::contains(const Vector& v) const {
    require_same(v.size(), ambient_, "membership");
    require_field(v.field(), field_);
    // Reduce v against the RREF basis using pivot columns.
    Vector r = v;
    const auto piv = pivots();
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Scalar k = r[piv[i]];
        if (!k.is_zero()) r -= k * basis_[i];
    }
    return r.is_zero();
}

std::string Subspace::to_string() const {
    if (basis_.empty()) return "<0>";
    std::ostringstream os;
    os << '<';
    for (std::size_t i = 0; i < basis_.size(); ++i) os << (i ? ", " : "") << basis_[i].to_string();
    os << '>';
    return os.str();
}

std::string Subspace::to_basis_string() const {
    if (basis_.empty()) return "<0>";
    std::ostringstream os;
    os << '<';
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (i) os << ", ";
        const auto& b = basis_[i];
        std::size_t nonzero = 0, idx = 0;
        for (std::size_t c = 0; c < ambient_; ++c)
            if (!b[c].is_zero()) {
                ++nonzero;
                idx = c;
            }
        if (nonzero == 1 && b[idx].is_one())
            os << 'e' << (idx + 1);
        else
            os << b.to_string();
    }
    os << '>';
    return os.str();
}

Subspace null_space(const Matrix& m) {
    Matrix r = m;
    const auto piv = reduce(r);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<Vector> vecs;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vector v(n, m.field());
        v[free] = Scalar::one(m.field());
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, free);
        vecs.push_back(std::move(v));
    }
    return Subspace::span(vecs, n, m.field());
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    require_same(a.ambient_dim(), b.ambient_dim(), "subspace sum");
    require_field(a.field(), b.field());
    std::vector<Vector> all = a.basis();
    all.insert(all.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(all, a.ambient_dim(), a.field());
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    require_same(a.ambient_dim(), b.ambient_dim(), "subspace intersection");
    require_field(a.field(), b.field());
    const std::size_t n = a.ambient_dim();
    const Field f = a.field();
    if (a.is_zero() || b.is_zero()) return Subspace::zero(n, f);
    // Solve sum_i c_i a_i - sum_j d_j b_j = 0; each solution gives sum_i c_i a_i in both spaces.
    const std::size_t ra = a.dim(), rb = b.dim();
    Matrix system(n, ra + rb, f);
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t k = 0; k < n; ++k) system(k, i) = a.basis()[i][k];
    for (std::size_t j = 0; j < rb; ++j)
        for (std::size_t k = 0; k < n; ++k) system(k, ra + j) = -b.basis()[j][k];
    const Subspace coeffs = null_space(system);
    std::vector<Vector> common;
    for (const auto& c : coeffs.basis()) {
        Vector v(n, f);
        for (std::size_t i = 0; i < ra; ++i)
            if (!c[i].is_zero()) v += c[i] * a.basis()[i];
        common.push_back(std::move(v));
    }
    return Subspace::span(common, n, f);
}

bool is_subset(const Subspace& a, const Subspace& b) {
    require_same(a.ambient_dim(), b.ambient_dim(), "subspace comparison");
    require_field(a.field(), b.field());
    if (a.dim() > b.dim()) return false;
    for (const auto& v : a.basis())
        if (!b.contains(v)) return false;
    return true;
}

SubspaceRelation subspace_compare(const Subspace& a, const Subspace& b) {
    const bool ab = is_subset(a, b);
    const bool ba = is_subset(b, a);
    if (ab && ba) return SubspaceRelation::equal;
    if (ab) return SubspaceRelation::a_in_b;
    if (ba) return SubspaceRelation::b_in_a;
    return SubspaceRelation::incomparable;
}

bool member(const Vector& v, const Subspace& s) { return s.contains(v); }

Subspace image(const Matrix& m, const Subspace& s) {
    require_same(m.cols(), s.ambient_dim(), "image");
    std::vector<Vector> imgs;
    imgs.reserve(s.dim());
    for (const auto& v : s.basis()) imgs.push_back(m * v);
    return Subspace::span(imgs, m.rows(), m.field());
}

}  // namespace leibniz
