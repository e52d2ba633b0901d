#include "orbitforge/cohomology.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace orbitforge {

namespace {

const QuadScalar kZero;
const QuadScalar kOne(Rational(1));

void require_rep_shape(const OrthoRep& r) {
    if (r.dim == 0) throw std::invalid_argument("representation: dimension must be positive");
    if (r.mats.empty()) throw std::invalid_argument("representation: needs at least one generator");
    for (const auto& m : r.mats) {
        if (row_count(m) != r.dim || col_count(m) != r.dim)
            throw std::invalid_argument("representation: generator matrix has wrong shape");
    }
}

void require_matching(const Presentation& p, const OrthoRep& r) {
    require_rep_shape(r);
    if (r.mats.size() != static_cast<std::size_t>(p.num_gens))
        throw std::invalid_argument("representation: generator count differs from presentation");
}

void require_cocycle_shape(const OrthoRep& r, const Cocycle& b) {
    if (b.vals.size() != r.mats.size())
        throw std::invalid_argument("cocycle: one value per generator required");
    for (const auto& v : b.vals)
        if (v.size() != r.dim) throw std::invalid_argument("cocycle: value has wrong dimension");
}

void require_orthogonal(const OrthoRep& r) {
    require_rep_shape(r);
    const QMat id = identity_mat(r.dim);
    for (const auto& m : r.mats)
        if (mat_mul(transpose(m), m) != id)
            throw std::invalid_argument("representation: generator matrix is not orthogonal");
}

// Generators with precomputed inverses; blocks restrict to non-orthogonal
// matrices, so inverses are stored instead of assuming transposes.
struct GenRep {
    std::size_t dim = 0;
    std::vector<QMat> mats;
    std::vector<QMat> invs;
};

GenRep to_gen(const OrthoRep& r) {
    GenRep g;
    g.dim = r.dim;
    g.mats = r.mats;
    g.invs.reserve(r.mats.size());
    for (const auto& m : r.mats) g.invs.push_back(transpose(m));
    return g;
}

void require_word_fits(const GenRep& r, const Word& w) {
    for (const auto& l : w.letters())
        if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= r.mats.size())
            throw std::invalid_argument("word uses a generator outside the representation");
}

QMat gen_evaluate(const GenRep& r, const Word& w) {
    require_word_fits(r, w);
    QMat acc = identity_mat(r.dim);
    for (const auto& l : w.letters()) {
        const QMat& step = l.exp > 0 ? r.mats[l.gen] : r.invs[l.gen];
        for (long k = l.exp > 0 ? l.exp : -l.exp; k > 0; --k) acc = mat_mul(acc, step);
    }
    return acc;
}

QVec gen_extend(const GenRep& r, const std::vector<QVec>& vals, const Word& w) {
    require_word_fits(r, w);
    QVec acc(r.dim, kZero);
    QMat cur = identity_mat(r.dim);
    for (const auto& l : w.letters()) {
        for (long k = l.exp > 0 ? l.exp : -l.exp; k > 0; --k) {
            if (l.exp > 0) {
                acc = vec_add(acc, mat_vec(cur, vals[l.gen]));
                cur = mat_mul(cur, r.mats[l.gen]);
            } else {
                // b(x^-1) = -pi(x^-1) b(x), folded against the running prefix
                cur = mat_mul(cur, r.invs[l.gen]);
                acc = vec_sub(acc, mat_vec(cur, vals[l.gen]));
            }
        }
    }
    return acc;
}

// b(w) = sum_i M_i b(x_i); returns the coefficient matrices M_i.
std::vector<QMat> word_coefficients(const GenRep& r, const Word& w) {
    require_word_fits(r, w);
    std::vector<QMat> coef(r.mats.size(), zero_mat(r.dim, r.dim));
    QMat cur = identity_mat(r.dim);
    for (const auto& l : w.letters()) {
        for (long k = l.exp > 0 ? l.exp : -l.exp; k > 0; --k) {
            if (l.exp > 0) {
                coef[l.gen] = mat_add(coef[l.gen], cur);
                cur = mat_mul(cur, r.mats[l.gen]);
            } else {
                cur = mat_mul(cur, r.invs[l.gen]);
                coef[l.gen] = mat_sub(coef[l.gen], cur);
            }
        }
    }
    return coef;
}

// Rows of the relator-extension map on stacked generator values (m*d columns).
// No relators leaves a single zero row: no constraints, full kernel.
QMat relator_matrix(const GenRep& r, const std::vector<Word>& relators) {
    const std::size_t m = r.mats.size(), d = r.dim;
    if (relators.empty()) return zero_mat(1, m * d);
    QMat rows;
    rows.reserve(relators.size() * d);
    for (const auto& w : relators) {
        std::vector<QMat> coef = word_coefficients(r, w);
        for (std::size_t i = 0; i < d; ++i) {
            QVec row(m * d, kZero);
            for (std::size_t g = 0; g < m; ++g)
                for (std::size_t j = 0; j < d; ++j) row[g * d + j] = coef[g][i][j];
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

// Stacked (pi(x_i) - 1), the coboundary map v -> ((pi(x_i)-1)v)_i.
QMat coboundary_matrix(const GenRep& r) {
    const std::size_t d = r.dim;
    QMat rows;
    rows.reserve(r.mats.size() * d);
    for (const auto& m : r.mats) {
        for (std::size_t i = 0; i < d; ++i) {
            QVec row(d, kZero);
            for (std::size_t j = 0; j < d; ++j) {
                row[j] = m[i][j];
                if (i == j) row[j] = row[j] - kOne;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<Cocycle> unflatten_cocycles(const std::vector<QVec>& flat, std::size_t m,
                                        std::size_t d) {
    std::vector<Cocycle> out;
    out.reserve(flat.size());
    for (const auto& v : flat) {
        Cocycle c;
        c.vals.reserve(m);
        for (std::size_t g = 0; g < m; ++g)
            c.vals.emplace_back(v.begin() + static_cast<long>(g * d),
                                v.begin() + static_cast<long>((g + 1) * d));
        out.push_back(std::move(c));
    }
    return out;
}

bool gen_is_cocycle(const GenRep& r, const std::vector<Word>& relators,
                    const std::vector<QVec>& vals) {
    for (const auto& w : relators)
        if (!is_zero_vec(gen_extend(r, vals, w))) return false;
    return true;
}

long gen_h1_dim(const GenRep& r, const std::vector<Word>& relators) {
    const long md = static_cast<long>(r.mats.size() * r.dim);
    const long z1 = md - static_cast<long>(rank(relator_matrix(r, relators)));
    const long b1 = static_cast<long>(rank(coboundary_matrix(r)));
    return z1 - b1;
}

// ---------------------------------------------------------------------------
// Commutant splitting

// Constraint rows on a d*c unknown X (row-major) for X A = B X.
QMat sylvester_rows(const QMat& a, const QMat& b) {
    const std::size_t rows_x = row_count(b), cols_x = col_count(a);
    QMat rows;
    rows.reserve(rows_x * cols_x);
    for (std::size_t i = 0; i < rows_x; ++i) {
        for (std::size_t j = 0; j < cols_x; ++j) {
            QVec row(rows_x * cols_x, kZero);
            for (std::size_t c = 0; c < cols_x; ++c) row[i * cols_x + c] = a[c][j];
            for (std::size_t rr = 0; rr < rows_x; ++rr)
                row[rr * cols_x + j] = row[rr * cols_x + j] - b[i][rr];
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

QMat unflatten_mat(const QVec& v, std::size_t rows, std::size_t cols) {
    QMat m(rows, QVec(cols, kZero));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = v[i * cols + j];
    return m;
}

QVec flatten_mat(const QMat& m) {
    QVec v;
    v.reserve(row_count(m) * col_count(m));
    for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
    return v;
}

// Exact orthogonal projector onto the span of independent columns.
QMat projector_from_basis(const std::vector<QVec>& basis, std::size_t d) {
    if (basis.empty()) return zero_mat(d, d);
    const std::size_t k = basis.size();
    QMat bt(k, QVec(d, kZero));  // rows = basis vectors
    for (std::size_t i = 0; i < k; ++i) bt[i] = basis[i];
    QMat b = transpose(bt);
    QMat gram_inv = inverse(mat_mul(bt, b));
    return mat_mul(b, mat_mul(gram_inv, bt));
}

// Canonical basis of range(P) for symmetric P: the nonzero rows of rref(P).
std::vector<QVec> range_basis(const QMat& p) {
    QMat r = p;
    std::size_t rk = rref(r);
    std::vector<QVec> out;
    out.reserve(rk);
    for (std::size_t i = 0; i < rk; ++i) out.push_back(r[i]);
    return out;
}

// Basis of the commutant of the block cut out by projector P:
// {X : X pi(x_i) = pi(x_i) X for all i, X = P X P}.
std::vector<QMat> block_commutant(const GenRep& r, const QMat& p) {
    const std::size_t d = r.dim;
    QMat rows;
    for (const auto& m : r.mats) {
        QMat part = sylvester_rows(m, m);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    // X - P X P = 0 rows: coefficient of X[rr][cc] in (P X P)[i][j] is P[i][rr] P[cc][j]
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            QVec row(d * d, kZero);
            for (std::size_t rr = 0; rr < d; ++rr)
                for (std::size_t cc = 0; cc < d; ++cc) {
                    QuadScalar c = p[i][rr] * p[cc][j];
                    if (rr == i && cc == j) c = c - kOne;
                    row[rr * d + cc] = -c;
                }
            rows.push_back(std::move(row));
        }
    }
    std::vector<QMat> out;
    for (const auto& v : kernel_basis(rows)) out.push_back(unflatten_mat(v, d, d));
    return out;
}

// Independent symmetrized commutant elements X + X^T, as matrices.
std::vector<QMat> symmetric_commutant_basis(const std::vector<QMat>& comm, std::size_t d) {
    QMat rows;
    for (const auto& x : comm) rows.push_back(flatten_mat(mat_add(x, transpose(x))));
    std::size_t rk = rref(rows);
    std::vector<QMat> out;
    out.reserve(rk);
    for (std::size_t i = 0; i < rk; ++i) out.push_back(unflatten_mat(rows[i], d, d));
    return out;
}

// Basis of {x in range(P) : S x = lambda x}.
std::vector<QVec> block_eigenspace(const QMat& s, const QuadScalar& lambda, const QMat& p,
                                   std::size_t d) {
    QMat rows = mat_sub(s, mat_scale(identity_mat(d), lambda));
    QMat outside = mat_sub(identity_mat(d), p);
    rows.insert(rows.end(), outside.begin(), outside.end());
    return kernel_basis(rows);
}

void split_block(const GenRep& r, const QMat& p, std::vector<RepBlock>& out) {
    const std::size_t d = r.dim;
    std::vector<QVec> basis = range_basis(p);
    const std::size_t dim = basis.size();
    if (dim == 0) return;
    if (dim == 1) {
        out.push_back(RepBlock{p, std::move(basis), true, false});
        return;
    }

    std::vector<QMat> sym = symmetric_commutant_basis(block_commutant(r, p), d);
    if (sym.size() <= 1) {
        // symmetric commutant = scalars on the block: no proper invariant
        // subspace can exist (its projector would be a symmetric idempotent)
        out.push_back(RepBlock{p, std::move(basis), true, false});
        return;
    }

    // Deterministic candidate family: symmetrized basis elements, then sums.
    std::vector<QMat> candidates = sym;
    for (std::size_t i = 0; i < sym.size(); ++i)
        for (std::size_t j = i + 1; j < sym.size(); ++j)
            candidates.push_back(mat_add(sym[i], sym[j]));

    for (const auto& s : candidates) {
        std::vector<std::vector<QVec>> pieces;
        std::size_t covered = 0;
        for (const auto& lambda : field_roots(charpoly(s))) {
            std::vector<QVec> e = block_eigenspace(s, lambda, p, d);
            if (e.empty() || e.size() >= dim) continue;
            covered += e.size();
            pieces.push_back(std::move(e));
        }
        if (pieces.empty()) continue;

        if (covered < dim) {
            // invariant residual: block vectors orthogonal to every piece
            QMat rows = mat_sub(identity_mat(d), p);
            for (const auto& e : pieces)
                for (const auto& v : e) rows.push_back(v);
            pieces.push_back(kernel_basis(rows));
        }
        for (const auto& e : pieces) split_block(r, projector_from_basis(e, d), out);
        return;
    }

    // symmetric commutant is bigger than the scalars, but every candidate's
    // spectrum left the field: a finer real splitting exists and is not guessed
    out.push_back(RepBlock{p, std::move(basis), false, true});
}

// Restriction of the action to a block: rho(x) = (B^T B)^-1 B^T pi(x) B.
// The result is invertible but generally not orthogonal, so inverses restrict
// the transposes instead of transposing the restriction.
GenRep restrict_rep(const GenRep& r, const std::vector<QVec>& basis) {
    const std::size_t k = basis.size();
    QMat bt(k, QVec(r.dim, kZero));
    for (std::size_t i = 0; i < k; ++i) bt[i] = basis[i];
    QMat b = transpose(bt);
    QMat gram_inv = inverse(mat_mul(bt, b));
    GenRep out;
    out.dim = k;
    for (std::size_t g = 0; g < r.mats.size(); ++g) {
        out.mats.push_back(mat_mul(gram_inv, mat_mul(bt, mat_mul(r.mats[g], b))));
        out.invs.push_back(mat_mul(gram_inv, mat_mul(bt, mat_mul(r.invs[g], b))));
    }
    return out;
}

// Nonzero intertwiner rho T = T sigma exists; for certified-irreducible blocks
// this is exactly equivalence of the restrictions.
bool blocks_equivalent(const GenRep& rho, const GenRep& sigma) {
    if (rho.dim != sigma.dim) return false;
    QMat rows;
    for (std::size_t g = 0; g < rho.mats.size(); ++g) {
        QMat part = sylvester_rows(sigma.mats[g], rho.mats[g]);  // T sigma = rho T
        rows.insert(rows.end(), part.begin(), part.end());
    }
    return !kernel_basis(rows).empty();
}

}  // namespace

// ---------------------------------------------------------------------------

RepReport validate_rep(const Presentation& p, const OrthoRep& r) {
    RepReport report;
    auto fail = [&report](std::string s) {
        report.ok = false;
        report.violations.push_back(std::move(s));
    };

    if (r.dim == 0) {
        fail("dimension must be positive");
        return report;
    }
    if (r.mats.size() != static_cast<std::size_t>(p.num_gens)) {
        std::ostringstream os;
        os << "expected " << p.num_gens << " generator matrices, got " << r.mats.size();
        fail(os.str());
        return report;
    }
    const std::string alpha = p.alphabet();
    for (std::size_t g = 0; g < r.mats.size(); ++g) {
        if (row_count(r.mats[g]) != r.dim || col_count(r.mats[g]) != r.dim) {
            fail(std::string("generator '") + alpha[g] + "' matrix has wrong shape");
            return report;
        }
    }

    const QMat id = identity_mat(r.dim);
    for (std::size_t g = 0; g < r.mats.size(); ++g) {
        if (mat_mul(transpose(r.mats[g]), r.mats[g]) != id)
            fail(std::string("generator '") + alpha[g] + "' matrix is not orthogonal");
    }
    if (!report.ok) return report;  // words below rely on transpose inverses

    GenRep gen = to_gen(r);
    for (const auto& w : p.relators) {
        if (gen_evaluate(gen, w) != id)
            fail("relator '" + w.format(alpha) + "' does not evaluate to the identity");
    }
    for (const auto& z : p.central_words) {
        QMat zm = gen_evaluate(gen, z);
        for (std::size_t g = 0; g < r.mats.size(); ++g) {
            if (mat_mul(zm, r.mats[g]) != mat_mul(r.mats[g], zm)) {
                fail("central word '" + z.format(alpha) + "' does not commute with generator '" +
                     alpha[g] + "'");
                break;
            }
        }
    }
    return report;
}

QMat rep_evaluate(const OrthoRep& r, const Word& w) {
    require_rep_shape(r);
    return gen_evaluate(to_gen(r), w);
}

QVec extend_cocycle(const OrthoRep& r, const Cocycle& b, const Word& w) {
    require_rep_shape(r);
    require_cocycle_shape(r, b);
    return gen_extend(to_gen(r), b.vals, w);
}

bool is_cocycle(const Presentation& p, const OrthoRep& r, const Cocycle& b) {
    require_matching(p, r);
    require_cocycle_shape(r, b);
    return gen_is_cocycle(to_gen(r), p.relators, b.vals);
}

std::vector<Cocycle> cocycle_space(const Presentation& p, const OrthoRep& r) {
    require_matching(p, r);
    GenRep gen = to_gen(r);
    return unflatten_cocycles(kernel_basis(relator_matrix(gen, p.relators)), r.mats.size(),
                              r.dim);
}

std::vector<Cocycle> coboundary_space(const OrthoRep& r) {
    require_rep_shape(r);
    // column space of the stacked map, via row reduction of its transpose
    QMat rows = transpose(coboundary_matrix(to_gen(r)));
    std::size_t rk = rref(rows);
    std::vector<QVec> flat(rows.begin(), rows.begin() + static_cast<long>(rk));
    return unflatten_cocycles(flat, r.mats.size(), r.dim);
}

long h1_dim(const Presentation& p, const OrthoRep& r) {
    require_matching(p, r);
    return gen_h1_dim(to_gen(r), p.relators);
}

CocycleClass h1_of_cocycle(const Presentation& p, const OrthoRep& r, const Cocycle& b) {
    require_matching(p, r);
    require_cocycle_shape(r, b);
    GenRep gen = to_gen(r);
    if (!gen_is_cocycle(gen, p.relators, b.vals))
        throw std::invalid_argument("h1_of_cocycle: relator extension does not vanish");
    QVec rhs;
    for (const auto& v : b.vals) rhs.insert(rhs.end(), v.begin(), v.end());
    std::optional<QVec> v = solve(coboundary_matrix(gen), rhs);
    CocycleClass out;
    out.is_coboundary = v.has_value();
    if (v) out.witness = std::move(*v);
    return out;
}

std::vector<QVec> invariant_vectors(const OrthoRep& r) {
    require_rep_shape(r);
    return kernel_basis(coboundary_matrix(to_gen(r)));
}

Decomposition decompose(const OrthoRep& r) {
    require_orthogonal(r);
    Decomposition dec;
    split_block(to_gen(r), identity_mat(r.dim), dec.blocks);
    for (const auto& b : dec.blocks)
        if (b.split_obstructed) dec.fully_split = false;
    return dec;
}

StrongCohomologyReport is_strongly_cohomological(const Presentation& p, const OrthoRep& r) {
    require_matching(p, r);
    require_orthogonal(r);
    StrongCohomologyReport report;
    report.decomposition = decompose(r);
    report.all_blocks_split = report.decomposition.fully_split;

    GenRep gen = to_gen(r);
    std::vector<GenRep> restricted;
    for (const auto& block : report.decomposition.blocks) {
        restricted.push_back(restrict_rep(gen, block.basis));
        report.block_h1.push_back(gen_h1_dim(restricted.back(), p.relators));
    }
    for (std::size_t i = 0; i < report.block_h1.size(); ++i) {
        if (report.block_h1[i] <= 0) {
            report.strongly_cohomological = false;
            report.witness = report.decomposition.blocks[i];
            return report;
        }
    }

    // Sums of equivalent blocks are genuinely different subrepresentations
    // (diagonal copies live inside them), so they get their own H^1 check.
    const std::size_t n = report.decomposition.blocks.size();
    std::vector<bool> grouped(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (grouped[i] || !report.decomposition.blocks[i].irreducible_certified) continue;
        std::vector<std::size_t> members{i};
        for (std::size_t j = i + 1; j < n; ++j) {
            if (grouped[j] || !report.decomposition.blocks[j].irreducible_certified) continue;
            if (blocks_equivalent(restricted[i], restricted[j])) {
                members.push_back(j);
                grouped[j] = true;
            }
        }
        if (members.size() < 2) continue;
        RepBlock sum;
        sum.projector = zero_mat(r.dim, r.dim);
        for (std::size_t j : members) {
            sum.projector = mat_add(sum.projector, report.decomposition.blocks[j].projector);
            const auto& bb = report.decomposition.blocks[j].basis;
            sum.basis.insert(sum.basis.end(), bb.begin(), bb.end());
        }
        if (gen_h1_dim(restrict_rep(gen, sum.basis), p.relators) <= 0) {
            report.strongly_cohomological = false;
            report.witness = std::move(sum);
            return report;
        }
    }

    report.strongly_cohomological = true;
    return report;
}

// ---------------------------------------------------------------------------

CentralGapReport central_gap_check(const Presentation& p, const OrthoRep& r, const Word& z,
                                   const Cocycle& b, long word_ceiling) {
    require_matching(p, r);
    require_cocycle_shape(r, b);
    require_orthogonal(r);
    if (word_ceiling < 1) throw std::invalid_argument("central_gap_check: word ceiling < 1");

    GenRep gen = to_gen(r);
    if (!gen_is_cocycle(gen, p.relators, b.vals))
        throw std::invalid_argument("central_gap_check: relator extension does not vanish");

    CentralGapReport report;
    const std::size_t d = r.dim;
    const QMat zm = gen_evaluate(gen, z);
    for (const auto& m : r.mats)
        if (mat_mul(zm, m) != mat_mul(m, zm))
            throw std::invalid_argument("central_gap_check: word is not central in the representation");
    report.central_ok = true;

    const QMat gap = mat_sub(identity_mat(d), zm);
    if (rank(gap) != d) throw std::domain_error("no central gap");
    report.has_gap = true;

    const QVec bz = gen_extend(gen, b.vals, z);
    report.bz_norm2 = dot(bz, bz);

    // C^2 = 4 ||b(z)||^2 / sigma_min^2 with sigma_min^2 the smallest eigenvalue
    // of the Gram matrix (1-pi(z))^T (1-pi(z)); exact when that eigenvalue lies
    // in the field, else a strict rational upper bound from a lower enclosure.
    const QMat gram = mat_mul(transpose(gap), gap);
    const QPoly cp = charpoly(gram);
    const SturmChain chain(cp);
    const std::vector<QuadScalar> roots = field_roots(cp);
    const QuadScalar below(-chain.root_bound() - 1);
    if (!roots.empty() && chain.count_in(below, roots.front()) == 1) {
        report.c2_exact = true;
        report.c2_bound = QuadScalar(Rational(4)) * report.bz_norm2 * roots.front().inverse();
    } else {
        Rational tol(1, 1024);
        Enclosure sig = eigen_min_enclosure(gram, tol);
        while (sgn(sig.lo) <= 0) {  // eigenvalue is positive: refine until lo is
            tol /= 1024;
            sig = eigen_min_enclosure(gram, tol);
        }
        report.c2_exact = false;
        report.c2_bound = report.bz_norm2 * QuadScalar(4 / sig.lo);
    }
    {
        Enclosure c2 = report.c2_bound.enclosure(32);
        if (sgn(c2.lo) < 0) c2.lo = 0;
        report.c_enclosure = Enclosure{sqrt_enclosure(c2.lo, 32).lo, sqrt_enclosure(c2.hi, 32).hi};
    }

    // The extension of a word depends only on its affine image (pi(w), b(w)),
    // so breadth-first search with exact state dedup covers every freely
    // reduced word of length <= L while visiting each image element once.
    // The per-element commutation identity (1 - pi(z)) b(w) = (1 - pi(w)) b(z)
    // is cross-checked on the way.
    const std::size_t m = r.mats.size();
    {
        // covered words: sum over l of 2m (2m-1)^(l-1), reported exactly
        Integer covered(0), level(2 * static_cast<long>(m));
        for (long l = 1; l <= word_ceiling; ++l) {
            covered += level;
            level *= 2 * static_cast<long>(m) - 1;
        }
        if (!covered.fits_slong_p())
            throw std::invalid_argument("central_gap_check: word ceiling too large");
        report.words_checked = covered.get_si();
    }
    report.max_disp2 = kZero;
    using Element = std::pair<QMat, QVec>;
    std::set<Element> seen;
    std::vector<Element> frontier{{identity_mat(d), QVec(d, kZero)}};
    seen.insert(frontier.front());
    for (long l = 1; l <= word_ceiling; ++l) {
        std::vector<Element> next_level;
        for (const auto& [q, t] : frontier) {
            for (std::size_t move = 0; move < 2 * m; ++move) {
                const std::size_t g = move / 2;
                Element next;
                if (move % 2 == 0) {
                    next.second = vec_add(t, mat_vec(q, b.vals[g]));
                    next.first = mat_mul(q, gen.mats[g]);
                } else {
                    next.first = mat_mul(q, gen.invs[g]);
                    next.second = vec_sub(t, mat_vec(next.first, b.vals[g]));
                }
                if (!seen.insert(next).second) continue;
                const QuadScalar disp2 = dot(next.second, next.second);
                if (report.max_disp2 < disp2) report.max_disp2 = disp2;
                if (mat_vec(gap, next.second) != vec_sub(bz, mat_vec(next.first, bz)))
                    throw std::logic_error("central_gap_check: commutation identity violated");
                next_level.push_back(std::move(next));
            }
        }
        frontier = std::move(next_level);
    }
    report.bound_ok = report.max_disp2 <= report.c2_bound;

    report.h1 = gen_h1_dim(gen, p.relators);
    report.h1_zero = report.h1 == 0;
    return report;
}

VanishOnCentreReport vanish_on_centre_check(const Presentation& p, const OrthoRep& r,
                                            const Cocycle& b) {
    require_matching(p, r);
    require_cocycle_shape(r, b);
    require_orthogonal(r);
    VanishOnCentreReport report;
    GenRep gen = to_gen(r);
    const std::string alpha = p.alphabet();

    if (!gen_is_cocycle(gen, p.relators, b.vals))
        report.problems.push_back("input is not a cocycle");
    if (!invariant_vectors(r).empty())
        report.problems.push_back("representation has invariant vectors");
    const QMat id = identity_mat(r.dim);
    for (const auto& z : p.central_words)
        if (gen_evaluate(gen, z) != id)
            report.problems.push_back("central word '" + z.format(alpha) +
                                      "' does not act trivially");
    report.preconditions_ok = report.problems.empty();
    if (!report.preconditions_ok) return report;

    // an empty central list passes vacuously
    report.all_vanish = true;
    for (const auto& z : p.central_words) {
        bool zero = is_zero_vec(gen_extend(gen, b.vals, z));
        report.vanished.push_back(zero);
        if (!zero) report.all_vanish = false;
    }
    return report;
}

// ---------------------------------------------------------------------------

FixedPointResult affine_fixed_point(const AffineActionSpec& a) {
    require_orthogonal(a.rep);
    require_cocycle_shape(a.rep, a.b);
    const std::size_t d = a.rep.dim;
    const std::vector<QVec> inv = invariant_vectors(a.rep);
    const QMat pt = projector_from_basis(inv, d);

    // (pi(x_i) - 1) v = -b_perp(x_i) jointly, with v constrained into the
    // complement of the invariant part by the rows t^T v = 0.
    QMat rows;
    QVec rhs;
    const QMat id = identity_mat(d);
    for (std::size_t g = 0; g < a.rep.mats.size(); ++g) {
        QMat diff = mat_sub(a.rep.mats[g], id);
        QVec bperp = vec_sub(a.b.vals[g], mat_vec(pt, a.b.vals[g]));
        for (std::size_t i = 0; i < d; ++i) {
            rows.push_back(diff[i]);
            rhs.push_back(-bperp[i]);
        }
    }
    for (const auto& t : inv) {
        rows.push_back(t);
        rhs.push_back(kZero);
    }
    std::optional<QVec> v = solve(rows, rhs);
    FixedPointResult out;
    out.exists = v.has_value();
    if (v) out.point = std::move(*v);
    return out;
}

OrbitProbeReport orbit_decomposition_probe(const AffineActionSpec& a, long word_ceiling) {
    require_orthogonal(a.rep);
    require_cocycle_shape(a.rep, a.b);
    if (word_ceiling < 0) throw std::invalid_argument("orbit probe: negative word ceiling");

    const std::size_t d = a.rep.dim, m = a.rep.mats.size();
    GenRep gen = to_gen(a.rep);
    const QMat pt = projector_from_basis(invariant_vectors(a.rep), d);
    const QMat id = identity_mat(d);

    OrbitProbeReport report;
    FixedPointResult fp = affine_fixed_point(a);
    report.fixed_point_exists = fp.exists;
    if (fp.exists) report.fixed_point = fp.point;

    using Elem = std::pair<QMat, QVec>;  // affine map: x -> Q x + t
    std::set<Elem> seen;
    std::vector<Elem> frontier{{id, QVec(d, kZero)}};
    seen.insert(frontier.front());
    report.rows.push_back(OrbitRadiusRow{0, 1, kZero});

    for (long len = 1; len <= word_ceiling; ++len) {
        std::vector<Elem> next_frontier;
        QuadScalar level_max;
        for (const auto& [q, t] : frontier) {
            for (std::size_t g = 0; g < m; ++g) {
                for (int dir = 0; dir < 2; ++dir) {
                    Elem next;
                    if (dir == 0) {
                        next.first = mat_mul(q, gen.mats[g]);
                        next.second = vec_add(t, mat_vec(q, a.b.vals[g]));
                    } else {
                        next.first = mat_mul(q, gen.invs[g]);
                        next.second = vec_sub(t, mat_vec(next.first, a.b.vals[g]));
                    }
                    if (!seen.insert(next).second) continue;
                    QVec perp = vec_sub(next.second, mat_vec(pt, next.second));
                    QuadScalar n2 = dot(perp, perp);
                    if (level_max < n2) level_max = n2;
                    next_frontier.push_back(std::move(next));
                }
            }
        }
        report.rows.push_back(
            OrbitRadiusRow{len, static_cast<long>(next_frontier.size()), level_max});
        frontier = std::move(next_frontier);
    }
    report.total_elements = static_cast<long>(seen.size());

    if (fp.exists) {
        const QuadScalar bound =
            QuadScalar(Rational(4)) * dot(report.fixed_point, report.fixed_point);
        report.bound_certified = true;
        for (const auto& row : report.rows)
            if (!(row.max_perp_norm2 <= bound)) report.bound_certified = false;
    }
    return report;
}

}  // namespace orbitforge
