long long total_of(int *x, int num)
{
    long long s = 0;
    int p;
    p = 0;
    while (p < num) {
        s += x[p];
        p++;
    }
    return s;
}

int main()
{
    int x[12] = {-2, -4, 98, -15, 73, 30, 48, 64, 18, 40, 47, 49};
    int num = 12;
    printf("%lld\n", (long long)total_of(x, num));
    return 0;
}
