void insertion_sort(int x[], int cnt)
{
    int idx, col, key;
    for (idx = 1; idx < cnt; idx++) {
        key = x[idx];
        col = idx - 1;
        while (col >= 0 && x[col] > key) {
            x[col + 1] = x[col];
            col--;
        }
        x[col + 1] = key;
    }
}

int main()
{
    int cnt, x[1000];
    scanf("%d", &cnt);
    for (int idx = 0; idx < cnt; idx++) {
        scanf("%d", &x[idx]);
    }
    insertion_sort(x, cnt);
    for (int idx = 0; idx < cnt; idx++) {
        printf("%d ", x[idx]);
    }
    printf("\n");
    return 0;
}
