/* digit sum */
int main()
{
    int x, s = 0, digit;
    scanf("%d", &x);
    if (x < 0)
        x = -x;
    do {
        s += x % 10;
        x = x / 10;
    } while (x != 0);
    printf("%d\n", s);
    return 0;
}
