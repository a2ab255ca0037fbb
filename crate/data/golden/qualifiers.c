static inline int sq(const int x) { return x * x; }
volatile int flag;
register int fast(register int r);
extern const char *const names[3];
int f(void)
{
    auto int local = 1;
    static int counter;
    const volatile unsigned short s = 2;
    return local + counter + s;
}
