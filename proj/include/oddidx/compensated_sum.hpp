#pragma once

#include <cmath>

namespace oddidx {

// Neumaier's variant of Kahan summation. Feeding the same terms in the same
// order always yields the same bits, so a streaming pass can stand in for
// independent prefix computations.
class CompensatedSum {
public:
    void add(double x)
    {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    CompensatedSum& operator+=(double x)
    {
        add(x);
        return *this;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace oddidx
