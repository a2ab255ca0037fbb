typedef int T;
typedef struct { double re, im; } complex_t;
typedef complex_t *cptr;
T twice(T v) { return v * 2; }
int main(void)
{
    T a = 1;
    cptr p = 0;
    complex_t z;
    {
        int T;
        T = 3;
        a = T;
    }
    z.re = (T)a;
    return sizeof(T) + sizeof(complex_t) + (p != 0);
}
