int digit_sum(int number)
{
    int s = 0, r;
    while (number > 0) {
        r = number % 10;
        s += r;
        number /= 10;
    }
    return s;
}

int main()
{
    int number;
    while (scanf("%d", &number) == 1)
        printf("%d\n", digit_sum(number));
    return 0;
}
