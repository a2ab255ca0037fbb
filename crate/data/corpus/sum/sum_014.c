int main()
{
    int number, total = 0, d;
    scanf("%d", &number);
    if (number < 0)
        number = -number;
    while (number > 0) {
        d = number % 10;
        total += d;
        number /= 10;
    }
    printf("%d\n", total);
    return 0;
}
