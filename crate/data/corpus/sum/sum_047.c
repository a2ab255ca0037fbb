// range sums with prefix sums
int pre[100005];

int main()
{
    int num, q, lo, hi, x;
    int i;
    scanf("%d", &num);
    pre[0] = 0;
    for (i = 1; i < num + 1; i++) {
        scanf("%d", &x);
        pre[i] = pre[i - 1] + x;
    }
    scanf("%d", &q);
    while (q--) {
        scanf("%d %d", &lo, &hi);
        printf("%lld\n", pre[hi] - pre[lo - 1]);
    }
    return 0;
}
