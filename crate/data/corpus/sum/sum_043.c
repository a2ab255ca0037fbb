long total_of(int *arr, int num)
{
    long s = 0;
    int k;
    k = 0;
    while (k < num) {
        s += arr[k];
        k++;
    }
    return s;
}

int main()
{
    int num, arr[1000];
    int k;
    scanf("%d", &num);
    k = 0;
    while (k < num) {
        scanf("%d", &arr[k]);
        k++;
    }
    printf("%lld\n", (long)total_of(arr, num));
    return 0;
}
