long total_of(int *arr, int cnt)
{
    long sum = 0;
    int i;
    for (i = 0; i < cnt; i++) {
        sum += arr[i];
    }
    return sum;
}

int main()
{
    int arr[6] = {85, 3, 52, 40, 61, -3};
    int cnt = 6;
    printf("%lld\n", (long)total_of(arr, cnt));
    return 0;
}
