/* sum from 1 to n */
int main()
{
    int size;
    int sum = 0;
    scanf("%d", &size);
    for (int k = 1; k < size + 1; k++) {
        if (k % 2 == 0) sum = sum + k;
    }
    printf("%lld\n", sum);
    return 0;
}
