#include "qv/qbinomial.hpp"

#include <mutex>
#include <vector>

#include "qv/errors.hpp"

namespace qv {

Integer binomial(long n, long k) {
    if (n < 0) throw Error("binomial with negative upper index");
    if (k < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

namespace {

/// Row-filled Pascal triangle of Gaussian binomials behind a mutex.
class QBinomialTable {
public:
    QPoly get(long n, long k) {
        std::scoped_lock lock(mu_);
        while (static_cast<long>(rows_.size()) <= n) {
            const long i = static_cast<long>(rows_.size());
            std::vector<QPoly> row(i + 1);
            row[0] = QPoly::constant(Rational(1));
            row[i] = QPoly::constant(Rational(1));
            for (long j = 1; j < i; ++j)
                row[j] = rows_[i - 1][j] + rows_[i - 1][j - 1].shifted(i - j);
            rows_.push_back(std::move(row));
        }
        return rows_[n][k];
    }

private:
    std::mutex mu_;
    std::vector<std::vector<QPoly>> rows_;
};

QBinomialTable& table() {
    static QBinomialTable t;
    return t;
}

}  // namespace

QPoly gauss_binomial(long n, long k) {
    if (n < 0) throw Error("gauss_binomial with negative upper index");
    if (k < 0 || k > n) return QPoly::zero();
    return table().get(n, k);
}

QPoly q_pochhammer_power(long alpha, long n) {
    QPoly r = QPoly::constant(Rational(1));
    for (long i = 0; i < n; ++i) {
        QPoly factor = QPoly::constant(Rational(1));
        factor.add_term(alpha + i, Rational(-1));
        r = r * factor;
        if (r.is_zero()) break;
    }
    return r;
}

}  // namespace qv
