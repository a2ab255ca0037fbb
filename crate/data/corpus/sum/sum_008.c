int digit_sum(int x)
{
    int sum = 0, digit;
    while (x > 0) {
        digit = x % 10;
        sum += digit;
        x /= 10;
    }
    return sum;
}

int main()
{
    int x;
    while (scanf("%d", &x) == 1)
        printf("%d\n", digit_sum(x));
    return 0;
}
