// digit sum
int digit_sum(int m)
{
    int total = 0, r;
    while (m > 0) {
        r = m % 10;
        total += r;
        m /= 10;
    }
    return total;
}

int main()
{
    int m;
    while (scanf("%d", &m) == 1)
        printf("%d\n", digit_sum(m));
    return 0;
}
