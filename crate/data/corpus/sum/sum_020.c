int digit_sum(int m)
{
    int s = 0, digit;
    while (m > 0) {
        digit = m % 10;
        s += digit;
        m /= 10;
    }
    return s;
}

int main()
{
    int m;
    while (scanf("%d", &m) == 1)
        printf("%d\n", digit_sum(m));
    return 0;
}
