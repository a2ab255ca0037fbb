int main()
{
    int size;
    long long sum = 0;
    scanf("%d", &size);
    for (int k = 1; k < size + 1; k++) {
        if (k % 2 == 1)
        sum += k;
    }
    printf("%lld\n", sum);
    return 0;
}
