int main()
{
    int n, a[10];
    scanf("%d", &n);
    printf("%d %d\n", n, a[n - 1]);
    putchar('\n');
    exit(0);
    return rand() % 10;
}
