int main(void)
{
    int len, v[500];
    long long sum = 0;
    int i;
    scanf("%d", &len);
    for (i = 0; i < len; i++)
        scanf("%d", &v[i]);
    for (i = 0; i < len; i++)
        sum = sum + v[i];
    printf("%d\n", (int)sum);
    return 0;
}
