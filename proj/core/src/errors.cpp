#include <jetprolong/errors.hpp>
#include <jetprolong/numeric.hpp>

namespace jetprolong
{

BigInt factorial(int k)
{
    if (k < 0) {
        throw DomainError("factorial of a negative number");
    }
    BigInt r = 1;
    for (int i = 2; i <= k; ++i) {
        r *= i;
    }
    return r;
}

BigInt falling_factorial(int k, int r)
{
    if (r < 0) {
        throw DomainError("falling factorial with negative length");
    }
    if (r > k) {
        return 0;
    }
    BigInt out = 1;
    for (int i = 0; i < r; ++i) {
        out *= (k - i);
    }
    return out;
}

BigInt binomial(int k, int r)
{
    if (r < 0 || r > k) {
        return 0;
    }
    return falling_factorial(k, r) / factorial(r);
}

} // namespace jetprolong
