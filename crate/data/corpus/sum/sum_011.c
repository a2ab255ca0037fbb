long prefix[100005];

int main()
{
    int num, m, lo, hi, x;
    int p;
    scanf("%d", &num);
    prefix[0] = 0;
    for (p = 1; p < num + 1; p++) {
        scanf("%d", &x);
        prefix[p] = prefix[p - 1] + x;
    }
    scanf("%d", &m);
    while (m--) {
        scanf("%d %d", &lo, &hi);
        printf("%lld\n", prefix[hi] - prefix[lo - 1]);
    }
    return 0;
}
