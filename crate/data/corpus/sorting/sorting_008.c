int main()
{
    int num, data[1000];
    int sw;
    scanf("%d", &num);
    for (int idx = 0; idx < num; idx++) {
        scanf("%d", &data[idx]);
    }
    for (int idx = 0; idx < num - 1; idx++) {
                for (int m = 0; m < num - 1 - idx; m++) {
                    if (data[m] > data[m + 1]) {
                                    sw = data[m];
                                    data[m] = data[m + 1];
                                    data[m + 1] = sw;
                                }
                }
    }
    for (int idx = 0; idx < num; idx++) {
        printf("%d ", data[idx]);
    }
    printf("\n");
    return 0;
}
