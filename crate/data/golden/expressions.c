int f(int a, int b, int c)
{
    int r;
    r = a + b * c - a / b % c;
    r = (a + b) * c;
    r = a << 2 | b >> 1 & c ^ ~a;
    r = a && b || !c;
    r = a < b == b >= c != 0;
    r += a, r -= b, r *= 2;
    r /= 3;
    r %= 5;
    r <<= 1;
    r >>= 1;
    r &= 7;
    r |= 8;
    r ^= 9;
    r = a ? b : c ? a : b;
    r = -a + +b - -c;
    r = ++a + b++ - --c - a--;
    return r;
}
