// sum of the elements
int main(void)
{
    int len, data[500];
    long sum = 0;
    int i;
    scanf("%d", &len);
    i = 0;
    while (i < len) {
        scanf("%d", &data[i]);
        i++;
    }
    i = 0;
    while (i < len) {
        sum = sum + data[i];
        i++;
    }
    printf("%d\n", (int)sum);
    return 0;
}
