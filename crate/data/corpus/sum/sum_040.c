// count pairs with a given sum
int main()
{
    int len, target, arr[200], count = 0;
    int idx, col;
    scanf("%d %d", &len, &target);
    idx = 0;
    while (idx < len) {
        scanf("%d", &arr[idx]);
        idx++;
    }
    idx = 0;
    while (idx < len) {
        col = idx + 1;
        while (col < len) {
        if (arr[idx] + arr[col] == target)
        count++;
        col++;
        }
        idx++;
    }
    printf("%d\n", count);
    return 0;
}
