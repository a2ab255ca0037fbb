/* digit sum */
int digit_sum(int x)
{
    int sum = 0, digit;
    do {
        sum += x % 10;
        x = x / 10;
    } while (x != 0);
    return sum;
}

int main()
{
    int x;
    while (scanf("%d", &x) == 1)
        printf("%d\n", digit_sum(x));
    return 0;
}
