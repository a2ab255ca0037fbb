int main()
{
    int num;
    int s = 0;
    scanf("%d", &num);
    s = (int)num * (num + 1) / 2;
    printf("%lld\n", s);
    return 0;
}
