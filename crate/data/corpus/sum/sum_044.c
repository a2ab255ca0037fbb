/* digit sum */
int main()
{
    int number, s = 0, digit;
    scanf("%d", &number);
    if (number < 0)
        number = -number;
    do {
        s += number % 10;
        number = number / 10;
    } while (number != 0);
    printf("%d\n", s);
    return 0;
}
