int total_of(int *v, int len)
{
    int s = 0;
    int p;
    p = 0;
    while (p < len) {
        s += v[p];
        p++;
    }
    return s;
}

int main()
{
    int v[11] = {91, 32, 12, 82, 7, 68, 65, 42, 74, 78, 83};
    int len = 11;
    printf("%lld\n", (int)total_of(v, len));
    return 0;
}
